#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "homspace/reductive.hpp"

namespace homspace {

// Two-summand generalized flag manifolds
//   B(l, p) = SO(2l+1) / U(p) x SO(2(l-p)+1),  2 <= p <= l,     l >= 2
//   C(l, p) = Sp(l) / U(p) x Sp(l-p),           1 <= p <= l-1,   l >= 2
//   D(l, p) = SO(2l) / U(p) x SO(2(l-p)),       2 <= p <= l-1,   l >= 4
// The D range admits p = l - 1 so that the Killing-Einstein row D(4, 3) is
// constructible; there m1 splits further under K (SO(2) is a torus).
struct FamilySpec {
  char family = 'B';
  int l = 2;
  int p = 2;
};

// Throws InvalidArgument outside the ranges above.
void validate(const FamilySpec& f);
// (d1, d2) = (dim m1, dim m2), with m1 the grade-one part of m.
std::pair<int, int> family_dims(const FamilySpec& f);
// The p for which d1 = 2 d2 (Killing metric Einstein), if it is an integer in range.
std::optional<int> killing_einstein_p(char family, int l);
// ASCII group-quotient name, e.g. "SO(11)/U(4)xSO(3)"; CP3 rows carry a "CP3=" prefix.
std::string flag_name(const FamilySpec& f);

struct FlagTableRow {
  int l = 0;
  int p = 0;
  std::string name;
  int d1 = 0;
  int d2 = 0;
};
std::vector<FlagTableRow> killing_einstein_table(char family, int lmax);

enum class Normalization { Default, NegKilling, BPrime };

struct SpaceDescriptor {
  std::string id;
  std::string family;  // cp3, sphere-s4, sphere-s6, sphere-s7, berger, lie-group, flag-B, flag-C, flag-D
  std::optional<int> d1, d2;  // expected summand dimensions
  std::optional<int> dim_m;
  std::optional<bool> cas_equal;
  std::vector<double> einstein_roots;  // expected g_t roots, where known
};

// The standard catalog entries, sorted by id.
std::vector<SpaceDescriptor> catalog_entries();

// Parses ids such as "cp3", "sphere-s7", "lie-group(su3)", "flag-C(5,3)".
// Throws InvalidArgument for an unknown id.
SpaceDescriptor describe(const std::string& id);

// Builds and validates the space; two-summand spaces come split with m1 first.
// Throws InvariantViolation if the result disagrees with the descriptor.
ReductiveSpace build_space(const std::string& id, Normalization norm = Normalization::Default,
                           double tol = kDefaultTol);

ReductiveSpace build_flag(const FamilySpec& f, Normalization norm = Normalization::Default, double tol = kDefaultTol);

// The CP3 = SO(5)/U(2) basis of so(5): k = {E12, E34, (E13 - E24)/sqrt2, (E14 + E23)/sqrt2},
// m = {E15, E25, E35, E45, (E13 + E24)/sqrt2, (E14 - E23)/sqrt2} (1-based E_ij).
std::vector<Mat> cp3_k_matrices();
std::vector<Mat> cp3_m_matrices();

}  // namespace homspace
