#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "alliance/graph.hpp"
#include "alliance/polynomial.hpp"

namespace alliance {

enum class FamilyKind {
  empty,
  path,
  cycle,
  complete,
  complete_bipartite,
  star,
  double_star,
  complete_minus_matching,
};

// A named graph family instance. Parameter meaning by kind:
//   empty/path/cycle/complete/star: p = vertex count (star counts its center)
//   complete_bipartite: p, q = side sizes
//   double_star: p, q = vertex counts of the two stars (total p + q)
//   complete_minus_matching: p = vertex count, q = removed matching size
struct FamilySpec {
  FamilyKind kind = FamilyKind::empty;
  int p = 0;
  int q = 0;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// Text syntax: "kind:p" or "kind:p,q", e.g. "cycle:5", "double_star:4,6".
// Throws parse_error on bad syntax or out-of-range parameters.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

// Total number of vertices of the instance.
int family_order(const FamilySpec& spec);

// Builds the graph. Parameter ranges: empty/complete p >= 1; path p >= 2;
// cycle p >= 3; star p >= 2; complete_bipartite p, q >= 1; double_star
// p, q >= 3; complete_minus_matching p >= 3, 0 <= q <= p/2. Violations throw
// std::invalid_argument.
Graph family_graph(const FamilySpec& spec);

// Closed-form polynomial. Defined for every family except that
// complete_minus_matching requires p even and q <= p/2 - 1 (the only case
// with a closed form; it then equals the complete-graph polynomial).
Polynomial family_polynomial(const FamilySpec& spec);

// The double-star closed form exists in two variants: the corrected form
// subtracts its odd-star-order terms at exponent (s+1)/2 and matches
// enumeration; the printed variant uses (s-1)/2 and is kept for empirical
// comparison only. The latter can go negative (r = t = 3 gives -4 at x^1),
// hence the signed representation.
enum class DoubleStarForm { corrected, printed };
std::vector<mpz_class> double_star_coefficients(int r, int t, DoubleStarForm form);

// Renders a signed coefficient vector in the same descending-power style as
// format_poly; used to report printed-form values.
std::string format_signed_coefficients(const std::vector<mpz_class>& coeffs);

}  // namespace alliance
