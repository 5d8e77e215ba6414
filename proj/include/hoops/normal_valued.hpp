#pragma once

// Conjugation, the normal-valued property (directly, through values and
// covers, and equationally), the named-claim checkers, and the search
// for algebras separating the two characterizations.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hoops/finite_hoop.hpp"
#include "hoops/filters.hpp"

namespace hoops {

// lambda_f(x) = f ~> (x*f),  rho_f(x) = f -> (f*x)
struct Conjugates {
  Elem lambda, rho;
};
Conjugates conjugates(FiniteHoop const& M, Elem f, Elem x);

// k_1 = 1, k_{n+1} = 2 k_n + 2: the exponents for which
// (a*b)^n >= a^{k_n} * b^{k_n} whenever x^2*y^2 <= y*x holds.
std::vector<long long> k_sequence(int nmax);

struct Eq61Report {
  bool holds = true;
  Elem wx = -1, wy = -1;
};
// x^2 * y^2 <= y * x over all pairs.
Eq61Report check_61(FiniteHoop const& M);

struct BasisReport {
  bool holds = true;
  Elem wx = -1, wy = -1;
  int wn = 0;         // 0 for the power-free inequality
  int which = 0;      // 1, 2, 3: which of the three schemas failed
};
// The three inequality schemas with n = 1..nmax:
//   (1) x^2*y^2 <= y*x
//   (2) ((x->y)^n ~> y)^2 <= (x~>y)^{2n} -> y
//   (3) ((x~>y)^n -> y)^2 <= (x->y)^{2n} ~> y
BasisReport equational_basis_check(FiniteHoop const& M, int nmax = 0);

struct DirectNvReport {
  bool holds = true;
  Elem g = -1, f = -1, v = -1;
  Mask value = 0;
};
// Every value V of every g < 1 is normal in its cover: for all f in the
// cover, the conjugates of V by f stay in V.  Inapplicable for
// non-basic algebras.
DirectNvReport is_normal_valued_direct(FiniteHoop const& M);

enum class ClaimId {
  PROP31, EQ31, EQ41, EQ42, PROP42, PROP43, LEMMA44, LEMMA46,
  EQ61, EQ62, PROP61, LEMMA62, LEMMA63, REMARK64, LEMMA65,
  THM66i, THM66ii, THM66iii, LEMMA67, THM68, COR69, LEMMA610,
  EQ63, EQ64, EQ65, THM612, CONJSUB,
};

std::vector<ClaimId> const& all_claims();
char const* claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(std::string const& s);
// One-line statement of what the claim checks.
char const* claim_statement(ClaimId id);

struct ClaimResult {
  ClaimId id{};
  enum class Status { pass, fail, inapplicable } status = Status::pass;
  std::string witness;      // rendered witness for fail
  std::string hypothesis;   // the failed hypothesis for inapplicable
};

// Exhaustive check of one claim, with every power quantifier bounded by
// nmax (default |M|).  Claims with hypotheses report inapplicable when
// the hypothesis fails.
ClaimResult check_claim(FiniteHoop const& M, ClaimId id, int nmax = 0);

struct Q2Result {
  // Basic algebras satisfying x^2*y^2 <= y*x that are not normal-valued
  // in the direct sense: candidates answering the open question.
  std::vector<FiniteHoop> candidates;
  // Disagreements between the direct and equational characterizations:
  // these falsify the implementation, not the theory.
  std::vector<FiniteHoop> fatal;
  long long scanned = 0;
  long long basic_scanned = 0;
  long long normal_valued_true = 0;
  long long normal_valued_false = 0;
};

Q2Result q2_search(std::vector<FiniteHoop> const& source, int nmax = 0);

}  // namespace hoops
