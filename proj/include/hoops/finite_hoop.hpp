#pragma once

// Finite pseudo hoops as validated operation tables.
//
// A pseudo hoop is an algebra (M; prod, rimp, limp, 1) where prod is a
// monoid operation with unit 1 and rimp/limp are its right and left
// residuals.  The defining identities, over all x, y, z:
//
//   (i)    x*1 = x = 1*x
//   (ii)   rimp(x,x) = 1 = limp(x,x)
//   (iii)  rimp(x*y, z) = rimp(x, rimp(y,z))
//   (iv)   limp(x*y, z) = limp(y, limp(x,z))
//   (v)    rimp(x,y)*x = rimp(y,x)*y = x*limp(x,y) = y*limp(y,x)
//
// The order x <= y holds iff rimp(x,y) = 1 (equivalently limp(x,y) = 1),
// the common value in (v) is the order-theoretic meet, and 1 is the top.
// Every finite pseudo hoop is automatically a bounded lattice: the meet
// of all elements is a least element, and joins are the meets of the
// (nonempty) sets of upper bounds.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hoops {

using Elem = int;
using Mask = std::uint64_t;

// Element indices are packed into 64-bit masks throughout.
inline constexpr int MAX_SIZE = 64;

inline constexpr Mask bit_of(Elem x) {
  return Mask{1} << x;
}

inline constexpr bool mask_has(Mask m, Elem x) {
  return (m >> x) & 1;
}

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

// Thrown for malformed input (dimensions, ranges, unparseable files).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation's precondition is violated by the caller.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when a result that is forced by a theorem fails to hold; this
// always indicates a bug (or an invalid algebra smuggled past validate),
// never a mathematical discovery.
struct FatalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when an operation's hypothesis (e.g. basicness) does not hold
// for the given algebra.
struct Inapplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square row-major table of element indices; t(x, y) is the entry in
// row x, column y (conventionally the left operand indexes the row).
class SquareTable {
 public:
  SquareTable() = default;
  explicit SquareTable(int n, Elem fill = 0) : n_(n), data_(size_t(n) * n, fill) {}

  static SquareTable from_rows(std::vector<std::vector<Elem>> const& rows);

  Elem operator()(Elem x, Elem y) const { return data_[size_t(x) * n_ + y]; }
  Elem& operator()(Elem x, Elem y) { return data_[size_t(x) * n_ + y]; }

  int dim() const { return n_; }
  bool empty() const { return n_ == 0; }
  std::vector<Elem> const& data() const { return data_; }

  friend bool operator==(SquareTable const&, SquareTable const&) = default;

 private:
  int n_ = 0;
  std::vector<Elem> data_;
};

struct AxiomViolation {
  std::string axiom;  // "i".."v", "order", "top", "meet", "bottom", "residuation"
  Elem x = -1, y = -1, z = -1;
  std::string detail;
};

// Raw, not-yet-validated data for an algebra.  The order may be given
// explicitly (leq[x] = upward mask of x) or implied by an arrow table;
// at least one of rimp/limp/leq must be present so the residual scan in
// derive_arrows has an order to work with.
struct HoopInput {
  int size = 0;
  Elem unit = 0;
  SquareTable prod;
  std::optional<SquareTable> rimp;
  std::optional<SquareTable> limp;
  std::optional<std::vector<Mask>> leq;  // leq[x] = mask of {y : x <= y}
  std::optional<Elem> zero;
  std::string name;
};

struct ValidationResult;
class FiniteHoop;
ValidationResult validate(HoopInput in);

class FiniteHoop {
 public:
  int size() const { return n_; }
  Elem unit() const { return unit_; }
  std::optional<Elem> zero() const { return zero_; }
  Elem bottom() const { return bottom_; }

  Elem prod(Elem x, Elem y) const { return prod_(x, y); }
  Elem rimp(Elem x, Elem y) const { return rimp_(x, y); }
  Elem limp(Elem x, Elem y) const { return limp_(x, y); }
  bool leq(Elem x, Elem y) const { return mask_has(up_[x], y); }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem meet(Elem x, Elem y) const { return meet_(x, y); }
  Elem join(Elem x, Elem y) const { return join_(x, y); }

  Mask up_mask(Elem x) const { return up_[x]; }
  Mask down_mask(Elem x) const { return down_[x]; }
  Mask all() const { return full_mask(n_); }

  SquareTable const& prod_table() const { return prod_; }
  SquareTable const& rimp_table() const { return rimp_; }
  SquareTable const& limp_table() const { return limp_; }

  std::string const& name() const { return name_; }
  void set_name(std::string s) { name_ = std::move(s); }

  bool same_tables(FiniteHoop const& o) const {
    return n_ == o.n_ && unit_ == o.unit_ && prod_ == o.prod_ && rimp_ == o.rimp_
           && limp_ == o.limp_;
  }

 private:
  FiniteHoop() = default;
  friend struct ValidationResult;
  friend ValidationResult validate(HoopInput in);

  int n_ = 0;
  Elem unit_ = 0;
  std::optional<Elem> zero_;
  Elem bottom_ = 0;
  SquareTable prod_, rimp_, limp_, meet_, join_;
  std::vector<Mask> up_, down_;
  std::string name_;
};

struct ValidationResult {
  std::optional<FiniteHoop> hoop;
  std::vector<AxiomViolation> violations;

  bool ok() const { return hoop.has_value(); }
  FiniteHoop const& value() const {
    if (!hoop) throw ContractError("ValidationResult::value on failed validation");
    return *hoop;
  }
};

// validate checks the axioms over all element triples and returns
// either the validated algebra or every violated axiom instance.
// Missing arrow tables are derived from prod and the order (see
// derive_arrows), after which divisibility (v) is checked like any
// other axiom.  Malformed input (bad dimensions, out-of-range entries,
// no order source) throws InputError; axiom failures are reported, not
// thrown.

struct ArrowTables {
  SquareTable rimp, limp;
};

struct ArrowFailure {
  bool right;  // true: rimp(x,y) has no greatest witness, false: limp
  Elem x = -1, y = -1;
};

// Residual scan: rimp(x,y) is the leq-greatest z with z*x <= y and
// limp(x,y) the leq-greatest z with x*z <= y, where leq is supplied as
// upward masks (up[x] = {y : x <= y}).  Fails with the offending pair
// when some set of witnesses has no greatest element.
std::optional<ArrowTables> derive_arrows(SquareTable const& prod,
                                         std::vector<Mask> const& up,
                                         ArrowFailure* failure = nullptr);

struct ClassFlags {
  bool bounded = false;
  bool commutative = false;
  bool cancellative = false;
  bool prelinear = false;
  bool basic = false;
  bool good = false;
  bool eq64 = false;
  bool pseudo_bl = false;
  bool lattice = false;
};

// Exhaustively evaluated class predicates.
//  - prelinear: both arrow joins exist and equal 1 for every pair
//  - basic: (x->y)->z <= ((y->x)->z)->z and the limp twin, all triples
//  - good: (x->0)~>0 = (x~>0)->0 for all x (0 = least element)
//  - eq64: (x->y)~>y = (x~>y)->y for all pairs
//  - pseudo_bl: bounded and prelinear
ClassFlags classify(FiniteHoop const& M);

struct MeetJoin {
  Elem meet;
  Elem vee1;  // ((x~>y)->y) /\ ((y~>x)->x)
  Elem vee2;  // ((x->y)~>y) /\ ((y->x)~>x)
  std::optional<Elem> join;  // order-theoretic least upper bound
};

// When flags is supplied and flags->prelinear holds, asserts
// vee1 = vee2 = join (FatalInconsistency otherwise).
MeetJoin meet_join(FiniteHoop const& M, Elem x, Elem y,
                   ClassFlags const* flags = nullptr);

Elem power(FiniteHoop const& M, Elem x, long long n);

// Least n >= 1 with x^n = x^{n+1}; at most size(M) since powers descend.
int stab_index(FiniteHoop const& M, Elem x);

// Global power bound: every "for all n" over powers is decided at
// n <= nmax_or(M, override) because powers stabilize within |M| steps.
inline int nmax_or(FiniteHoop const& M, int override_nmax = 0) {
  return override_nmax > 0 ? override_nmax : M.size();
}

}  // namespace hoops
