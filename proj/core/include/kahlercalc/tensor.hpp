#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kahlercalc/rational_function.hpp"

namespace kahlercalc {

/// Tensor factors live in a local unitary frame, so the metric is the
/// Kronecker delta and index character is tracked purely through slot
/// position: even slots are holomorphic, odd slots antiholomorphic.
/// Kinds: delta g_{ab'}, traceless Ricci, Ricci, and the curvature tensor
/// R_{ab'cd'} (kept opaque: only its traces and full self-pairing reduce).
enum class FactorKind : std::uint8_t { Delta, TracelessRicci, Ricci, Curvature };

struct IndexedFactor {
  FactorKind kind;
  std::vector<std::string> indices;  // 2 names, or 4 for Curvature
  friend bool operator==(const IndexedFactor&, const IndexedFactor&) = default;
  friend auto operator<=>(const IndexedFactor&, const IndexedFactor&) = default;
};

/// One summand: a rational-function coefficient, powers of the formal
/// scalars s, |tRic|^2 and |R|^2, and a product of indexed factors. Every
/// index name must occur exactly once (free) or exactly twice (contracted,
/// once per slot parity) across the term.
struct TensorTerm {
  RationalFunctionN coeff = RationalFunctionN(1);
  int s_power = 0;
  int tric2_power = 0;
  int riem2_power = 0;
  std::vector<IndexedFactor> factors;
};

class TensorExpr {
 public:
  TensorExpr() = default;
  explicit TensorExpr(TensorTerm term) { terms_.push_back(std::move(term)); }

  static TensorExpr scalar_monomial(const RationalFunctionN& coeff,
                                    int s_power = 0, int tric2_power = 0,
                                    int riem2_power = 0);

  const std::vector<TensorTerm>& terms() const { return terms_; }
  std::vector<TensorTerm>& terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TensorExpr scaled(const RationalFunctionN& c) const;
  friend TensorExpr operator+(const TensorExpr& a, const TensorExpr& b);
  friend TensorExpr operator-(const TensorExpr& a, const TensorExpr& b);
  /// Tensor product; index names shared between the operands become
  /// contractions of the product.
  friend TensorExpr operator*(const TensorExpr& a, const TensorExpr& b);

 private:
  std::vector<TensorTerm> terms_;
};

TensorExpr delta(const std::string& a, const std::string& b);
TensorExpr traceless_ricci(const std::string& a, const std::string& b);
TensorExpr ricci(const std::string& a, const std::string& b);
TensorExpr curvature(const std::string& a, const std::string& b,
                     const std::string& c, const std::string& d);

/// Scalar part of the curvature decomposition R = S + P + B:
/// S_{ij'kl'} = s/(2n(n+1)) (g_{ij'} g_{kl'} + g_{il'} g_{kj'}).
/// The four index names must be distinct.
TensorExpr build_S(const std::string& i, const std::string& j,
                   const std::string& k, const std::string& l);

/// Traceless Ricci part:
/// P_{ij'kl'} = 1/(n+2) (g_{ij'} tr_{kl'} + g_{kl'} tr_{ij'} +
///                       g_{il'} tr_{kj'} + g_{kj'} tr_{il'}).
TensorExpr build_P(const std::string& i, const std::string& j,
                   const std::string& k, const std::string& l);

/// The full curvature tensor as a single opaque factor.
TensorExpr build_R(const std::string& i, const std::string& j,
                   const std::string& k, const std::string& l);

struct ContractOptions {
  /// When set, the next rewrite is chosen uniformly at random among all
  /// applicable ones instead of deterministically; used to exercise
  /// confluence.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Applies the contraction rules to a fixed point:
///   g_{aa'} -> n                      tr_{aa'} -> 0
///   g_{ab'} T_{..b..} -> T_{..a..}    tr_{ab'} tr_{ba'} -> |tRic|^2
///   r_{ab'} -> tr_{ab'} + s/(2n) g_{ab'}         r_{aa'} -> s/2
///   single trace of R -> r            full R-R pairing -> |R|^2
/// The result is canonical; a scalar when no free indices remain.
/// DomainError on malformed index multiplicity or a same-parity pairing.
TensorExpr contract(const TensorExpr& expr, const ContractOptions& opts = {});

/// Canonical form: per term, bound indices are renamed to a fixed alphabet
/// over all factor orderings and curvature-symmetry rewritings, and like
/// terms are merged. Alpha-equivalent expressions compare equal.
TensorExpr canonical(const TensorExpr& expr);

bool expr_equal(const TensorExpr& a, const TensorExpr& b);

std::string to_string(const TensorExpr& expr);

/// Result of checking one contraction against its expected closed form.
struct IdentityCheck {
  std::string name;
  TensorExpr computed;  // canonical contracted form
  TensorExpr expected;  // canonical
  TensorExpr residual;  // canonical(computed - expected); empty iff pass
  bool pass = false;
};

IdentityCheck check_contraction(const std::string& name, const TensorExpr& raw,
                                const TensorExpr& expected);

/// The pointwise norm identities of the curvature decomposition, re-derived
/// by mechanical contraction:
///   |Ric|^2 = |tRic|^2 + s^2/(4n)
///   |S|^2   = s^2/(2n(n+1))
///   |P|^2   = 4/(n+2) |tRic|^2
std::vector<IdentityCheck> verify_norm_identities();

/// Orthogonality of the decomposition under the L2 pairing:
///   <S,P> = 0,  <R,S> = |S|^2,  <R,P> = |P|^2,
/// plus the resulting substitution |R - S - P|^2 = |R|^2 - |S|^2 - |P|^2
/// that defines |B|^2.
std::vector<IdentityCheck> verify_cross_terms();

}  // namespace kahlercalc
