#pragma once

// Extraction of the weighted-composition form Hf(y) = omega(y) f(x(y)) from a
// linear map, via the supports of the functionals f -> Hf(y).
//
// For a point y of the codomain, phi_y(f) = Hf(y) is a linear functional on
// the domain. A saturated set K supports phi_y when every f vanishing on K has
// phi_y(f) = 0. Because the kernel I_x of evaluation at x has codimension one,
// a single class [x] supports phi_y exactly when phi_y is a nonzero multiple
// of evaluation at x; that multiple is omega. The support map sends y to this
// class.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mwext/linmap.hpp"
#include "mwext/monomial.hpp"
#include "mwext/quotient.hpp"

namespace mwext {

// phi(u * G_A) = u . coeffs
struct Functional {
  std::vector<Elem> coeffs;
  friend bool operator==(const Functional&, const Functional&) = default;
};

Functional functional_at(const LinMap& h, PointIndex y);
Functional evaluation_functional(const FunctionSpace& a, PointIndex x);
Elem apply_functional(const Field& f, const Functional& phi, const Func& u);

// Exact kernel inclusion test. Throws NotSaturated unless s is saturated
// with respect to `qa`, the domain quotient.
bool is_support(const LinMap& h, const Quotient& qa, PointIndex y, const PointSet& s);

// No class supports phi_y proportionally.
struct Refutation {
  PointIndex y;
  Functional functional;
};

struct SupportMatch {
  ClassId cls;
  Elem omega;  // phi_y == omega * evaluation at rep(cls)
};

// Throws ZeroFunctional when phi_y == 0.
std::variant<SupportMatch, Refutation> minimal_support(const LinMap& h, const Quotient& qa, PointIndex y);

// Slow path: every saturated support of phi_y, found by scanning all unions
// of classes, and the inclusion-minimal ones. Throws EnumerationTooLarge when
// 2^classes exceeds max_enum.
struct SupportScan {
  std::vector<PointSet> supports;
  std::vector<PointSet> minimal;
};
SupportScan scan_supports(const LinMap& h, const Quotient& qa, PointIndex y, const Limits& limits);

// Fast path result agrees with the scan: a matched class is a minimal support
// with no proper nonempty saturated subset; a refutation means no single class
// is a support.
bool confirms_fast_path(const std::variant<SupportMatch, Refutation>& fast, const SupportScan& scan,
                        const Quotient& qa);

struct Decomposition {
  Quotient domain_classes;
  Quotient codomain_classes;
  std::vector<ClassId> h;        // y -> class of X
  std::vector<PointIndex> source;  // y -> representative point of h(y)
  std::vector<Elem> omega;       // y -> omega(source(y), y)
  bool verified = false;
};

struct DecomposeOptions {
  bool diagnostic = false;  // cross-check every y against scan_supports
  Limits limits;
};

// Refutations report the least failing y. Throws ZeroFunctional when some y
// has phi_y == 0, and TheoremViolation when the diagnostic cross-check fails.
std::variant<Decomposition, Refutation> decompose(const LinMap& h, const DecomposeOptions& options = {});

struct VerifyResult {
  bool ok = true;
  std::optional<std::size_t> failing_row;
  std::optional<PointIndex> failing_y;
  std::optional<Func> failing_codeword;
  bool full_check = false;  // every codeword was checked, not only the basis
};

// Reconstruction identity on every basis row and y; when q^k fits the
// enumeration bound, also on every codeword together with the implication
// Hf(y) == 0 => f(x(y)) == 0.
VerifyResult verify(const Decomposition& d, const LinMap& h, const Limits& limits);

struct HProperties {
  bool constant_on_classes = false;
  bool cozero_inclusion = false;
  bool onto = false;
  bool class_bijection = false;
};

HProperties h_properties(const Decomposition& d, const LinMap& h);

// omega(x', y') == lambda(y', y) omega(x, y) lambda(x, x') for all y ~ y' and
// x, x' in h(y), with omega(x, y) read off the functional, lambda from the
// supplied quotients, and the stored omega(y) checked at the representative.
bool omega_cocycle_check(const Decomposition& d, const LinMap& h, const Quotient& qa, const Quotient& qb);

struct NotMonomial {
  std::string obstruction;
};

std::variant<MonomialMap, NotMonomial> monomial_form(const Decomposition& d, const LinMap& h);

}  // namespace mwext
