#ifndef AREAL_BORDISM_HPP
#define AREAL_BORDISM_HPP

#include <vector>

#include "areal/linalg.hpp"

namespace areal {

enum class LabelKind { Volume, Imaginary, Zero };

// Volume label on a component: Volume has re > 0, Imaginary has re == 0 and
// value != 0, Zero is the additive identity.
struct Label {
  LabelKind kind = LabelKind::Zero;
  cd value = 0.0;
};

Label volume_label(cd s);    // classifies s by its real part
Label zero_label();
Label imaginary_label(double zeta);  // value = i*zeta
Label add(const Label& a, const Label& b);
void check_label(const Label& l);

// Connected component of genus g with sorted 0-based boundary slot sets.
struct Component {
  int genus = 0;
  std::vector<int> in;
  std::vector<int> out;
  Label label;
};

// Compact surface with n_in incoming and n_out outgoing circles; the
// components partition the slot ranges {0..n_in-1} and {0..n_out-1}.
struct Bordism {
  int n_in = 0;
  int n_out = 0;
  std::vector<Component> components;
};

void validate(const Bordism& x);

// X followed by Y: glues out-slot k of X to in-slot k of Y; merged components
// add genus by Euler characteristic additivity and add labels.
Bordism compose(const Bordism& x, const Bordism& y);

// Monoidal product: Y's slots shifted past X's.
Bordism disjoint_union(const Bordism& x, const Bordism& y);

// Orientation reversal: swaps in and out, labels kept.
Bordism dual(const Bordism& x);

Bordism conjugate_labels(const Bordism& x);
Bordism with_zero_labels(const Bordism& x);

// Sorted-component canonical form; equality of bordisms is equality of normal
// forms (exact label values).
Bordism normal_form(const Bordism& x);
bool equal(const Bordism& x, const Bordism& y);

// Elementary Morse pieces. A layer is one piece acting at `position` with
// identity cylinders elsewhere, or a wire permutation.
enum class PieceKind { Pants, Copants, Disk, Codisk, Cylinder, Permutation };

struct Layer {
  PieceKind kind = PieceKind::Cylinder;
  int position = 0;
  int width_in = 0;   // circles entering the whole layer
  int width_out = 0;  // circles leaving it
  Label label;        // Cylinder only
  std::vector<int> perm;  // Permutation only: slot i routes to perm[i]
};

// Canonical decomposition: route inputs into component order, then per
// component merge inputs left to right (or cap with a codisk), open g handle
// pairs as copants-then-pants, insert one labeled cylinder, split outputs (or
// cap with a disk), then route outputs to their slots.
std::vector<Layer> decompose(const Bordism& x);

// The layer as a standalone bordism.
Bordism layer_bordism(const Layer& l);

// Sequential composition of the layers; n_in fixes the width of an empty
// list.
Bordism recompose(const std::vector<Layer>& layers, int n_in);

// Builders.
Bordism cylinder(const Label& l);
Bordism cylinders(const std::vector<Label>& ls);
Bordism pants_bordism();
Bordism copants_bordism();
Bordism disk_bordism(const Label& l = zero_label());
Bordism codisk_bordism(const Label& l = zero_label());
Bordism closed_surface(int genus, const Label& l);

}  // namespace areal

#endif
