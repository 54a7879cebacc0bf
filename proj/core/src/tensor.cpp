#include "kahlercalc/tensor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "kahlercalc/errors.hpp"

namespace kahlercalc {

namespace {

std::size_t arity(FactorKind kind) {
  return kind == FactorKind::Curvature ? 4 : 2;
}

IndexedFactor make_factor(FactorKind kind, std::vector<std::string> indices) {
  return IndexedFactor{kind, std::move(indices)};
}

// name -> list of (factor position, slot)
using Occurrences = std::map<std::string, std::vector<std::pair<std::size_t, std::size_t>>>;

Occurrences occurrences(const TensorTerm& t) {
  Occurrences occ;
  for (std::size_t f = 0; f < t.factors.size(); ++f) {
    for (std::size_t s = 0; s < t.factors[f].indices.size(); ++s) {
      occ[t.factors[f].indices[s]].push_back({f, s});
    }
  }
  return occ;
}

void validate_term(const TensorTerm& t) {
  for (const auto& f : t.factors) {
    if (f.indices.size() != arity(f.kind)) {
      throw DomainError("tensor factor has wrong index arity");
    }
  }
  for (const auto& [name, occ] : occurrences(t)) {
    if (occ.size() > 2) {
      throw DomainError("malformed index multiplicity: '" + name +
                        "' occurs " + std::to_string(occ.size()) + " times");
    }
    if (occ.size() == 2 && occ[0].second % 2 == occ[1].second % 2) {
      throw DomainError("unsupported slot pairing: '" + name +
                        "' is contracted between two slots of equal character");
    }
  }
}

struct Redex {
  enum Kind {
    DeltaTrace,   // g_{aa'} -> n
    DeltaSubst,   // g_{ab'} T_{..b..} -> T_{..a..}
    TricTrace,    // tr_{aa'} -> 0
    TricPair,     // tr_{ab'} tr_{ba'} -> |tRic|^2
    RicciTrace,   // r_{aa'} -> s/2
    RicciExpand,  // r_{ab'} -> tr_{ab'} + s/(2n) g_{ab'}
    CurvTrace,    // one trace of R -> r
    CurvPair,     // full R-R pairing -> |R|^2
  };
  Kind kind;
  std::size_t f1 = 0;
  std::size_t f2 = 0;
  int aux = 0;
};

std::vector<Redex> find_redexes(const TensorTerm& t, bool all_variants) {
  std::vector<Redex> out;
  const Occurrences occ = occurrences(t);
  auto partner_exists = [&](const std::string& name, std::size_t self) {
    const auto& v = occ.at(name);
    return v.size() == 2 && (v[0].first != self || v[1].first != self);
  };

  for (std::size_t f = 0; f < t.factors.size(); ++f) {
    const IndexedFactor& fac = t.factors[f];
    switch (fac.kind) {
      case FactorKind::Delta: {
        if (fac.indices[0] == fac.indices[1]) {
          out.push_back({Redex::DeltaTrace, f});
          break;
        }
        const bool b_paired = partner_exists(fac.indices[1], f);
        const bool a_paired = partner_exists(fac.indices[0], f);
        if (b_paired) out.push_back({Redex::DeltaSubst, f, 0, 1});
        if (a_paired && (all_variants || !b_paired)) {
          out.push_back({Redex::DeltaSubst, f, 0, 0});
        }
        break;
      }
      case FactorKind::TracelessRicci: {
        if (fac.indices[0] == fac.indices[1]) {
          out.push_back({Redex::TricTrace, f});
          break;
        }
        for (std::size_t g = f + 1; g < t.factors.size(); ++g) {
          const IndexedFactor& other = t.factors[g];
          if (other.kind == FactorKind::TracelessRicci &&
              other.indices[0] == fac.indices[1] &&
              other.indices[1] == fac.indices[0]) {
            out.push_back({Redex::TricPair, f, g});
          }
        }
        break;
      }
      case FactorKind::Ricci: {
        if (fac.indices[0] == fac.indices[1]) {
          out.push_back({Redex::RicciTrace, f});
          if (!all_variants) break;
        }
        out.push_back({Redex::RicciExpand, f});
        break;
      }
      case FactorKind::Curvature: {
        const auto& ix = fac.indices;
        // Valid internal traces pair a holomorphic slot with an
        // antiholomorphic one; the Kahler symmetries turn each into the
        // Ricci tensor on the remaining slots.
        if (ix[0] == ix[1]) out.push_back({Redex::CurvTrace, f, 0, 0});
        if (ix[2] == ix[3]) out.push_back({Redex::CurvTrace, f, 0, 1});
        if (ix[0] == ix[3] && ix[0] != ix[1] && ix[2] != ix[3]) {
          out.push_back({Redex::CurvTrace, f, 0, 2});
        }
        if (ix[2] == ix[1] && ix[0] != ix[1] && ix[2] != ix[3]) {
          out.push_back({Redex::CurvTrace, f, 0, 3});
        }
        const bool distinct = ix[0] != ix[1] && ix[0] != ix[2] &&
                              ix[0] != ix[3] && ix[1] != ix[2] &&
                              ix[1] != ix[3] && ix[2] != ix[3];
        if (!distinct) break;
        for (std::size_t g = f + 1; g < t.factors.size(); ++g) {
          const IndexedFactor& other = t.factors[g];
          if (other.kind != FactorKind::Curvature) continue;
          const bool shares_all = std::all_of(
              ix.begin(), ix.end(), [&](const std::string& name) {
                return std::find(other.indices.begin(), other.indices.end(),
                                 name) != other.indices.end();
              });
          if (shares_all) out.push_back({Redex::CurvPair, f, g});
        }
        break;
      }
    }
  }
  return out;
}

void erase_factor(TensorTerm& t, std::size_t f) {
  t.factors.erase(t.factors.begin() + static_cast<std::ptrdiff_t>(f));
}

void erase_two(TensorTerm& t, std::size_t f1, std::size_t f2) {
  erase_factor(t, std::max(f1, f2));
  erase_factor(t, std::min(f1, f2));
}

void rename_everywhere(TensorTerm& t, std::size_t skip_factor,
                       const std::string& from, const std::string& to) {
  for (std::size_t f = 0; f < t.factors.size(); ++f) {
    if (f == skip_factor) continue;
    for (auto& name : t.factors[f].indices) {
      if (name == from) name = to;
    }
  }
}

const RationalFunctionN& rf_half() {
  static const RationalFunctionN v(BigRational(BigInt(1), BigInt(2)));
  return v;
}

// Applies one rewrite; returns the replacement terms (0, 1 or 2).
std::vector<TensorTerm> apply_redex(TensorTerm t, const Redex& r) {
  switch (r.kind) {
    case Redex::DeltaTrace: {
      t.coeff *= RationalFunctionN(PolyN::n());
      erase_factor(t, r.f1);
      return {std::move(t)};
    }
    case Redex::DeltaSubst: {
      const std::string keep = t.factors[r.f1].indices[1 - r.aux];
      const std::string drop = t.factors[r.f1].indices[r.aux];
      rename_everywhere(t, r.f1, drop, keep);
      erase_factor(t, r.f1);
      return {std::move(t)};
    }
    case Redex::TricTrace:
      return {};
    case Redex::TricPair: {
      t.tric2_power += 1;
      erase_two(t, r.f1, r.f2);
      return {std::move(t)};
    }
    case Redex::RicciTrace: {
      t.coeff *= rf_half();
      t.s_power += 1;
      erase_factor(t, r.f1);
      return {std::move(t)};
    }
    case Redex::RicciExpand: {
      const std::string a = t.factors[r.f1].indices[0];
      const std::string b = t.factors[r.f1].indices[1];
      TensorTerm traceless = t;
      traceless.factors[r.f1] =
          make_factor(FactorKind::TracelessRicci, {a, b});
      TensorTerm scalar = std::move(t);
      scalar.factors[r.f1] = make_factor(FactorKind::Delta, {a, b});
      scalar.coeff *= RationalFunctionN(PolyN(1), 2 * PolyN::n());
      scalar.s_power += 1;
      return {std::move(traceless), std::move(scalar)};
    }
    case Redex::CurvTrace: {
      const auto ix = t.factors[r.f1].indices;
      std::vector<std::string> rest;
      switch (r.aux) {
        case 0: rest = {ix[2], ix[3]}; break;  // R_{aa'kl'} -> r_{kl'}
        case 1: rest = {ix[0], ix[1]}; break;  // R_{ij'aa'} -> r_{ij'}
        case 2: rest = {ix[2], ix[1]}; break;  // R_{aj'ka'} -> r_{kj'}
        case 3: rest = {ix[0], ix[3]}; break;  // R_{ia'al'} -> r_{il'}
        default: throw DomainError("bad curvature trace");
      }
      t.factors[r.f1] = make_factor(FactorKind::Ricci, std::move(rest));
      return {std::move(t)};
    }
    case Redex::CurvPair: {
      t.riem2_power += 1;
      erase_two(t, r.f1, r.f2);
      return {std::move(t)};
    }
  }
  throw DomainError("unreachable redex kind");
}

// ---------------------------------------------------------------------------
// Canonicalization

bool is_bound(const Occurrences& occ, const std::string& name) {
  return occ.at(name).size() == 2;
}

// The four index writings of R_{pq'rs'} equal under the Kahler symmetries
// (swapping the holomorphic pair or the antiholomorphic pair).
std::vector<std::vector<std::string>> curvature_writings(
    const std::vector<std::string>& ix) {
  return {
      {ix[0], ix[1], ix[2], ix[3]},
      {ix[2], ix[1], ix[0], ix[3]},
      {ix[0], ix[3], ix[2], ix[1]},
      {ix[2], ix[3], ix[0], ix[1]},
  };
}

std::vector<IndexedFactor> rename_bound(const std::vector<IndexedFactor>& factors,
                                        const Occurrences& occ) {
  std::map<std::string, std::string> renaming;
  std::vector<IndexedFactor> out = factors;
  std::size_t counter = 0;
  for (auto& fac : out) {
    for (auto& name : fac.indices) {
      if (!is_bound(occ, name)) continue;
      auto it = renaming.find(name);
      if (it == renaming.end()) {
        it = renaming.emplace(name, "_" + std::to_string(counter++)).first;
      }
      name = it->second;
    }
  }
  return out;
}

// Deterministic representative over all factor orderings and curvature
// writings, with bound indices renamed to a fixed alphabet in order of
// first occurrence. Terms here have at most a handful of factors.
void canonicalize_term(TensorTerm& t) {
  if (t.factors.empty()) return;
  const Occurrences occ = occurrences(t);

  std::vector<std::vector<std::vector<std::string>>> writings;
  writings.reserve(t.factors.size());
  for (const auto& fac : t.factors) {
    if (fac.kind == FactorKind::Curvature) {
      writings.push_back(curvature_writings(fac.indices));
    } else {
      writings.push_back({fac.indices});
    }
  }

  std::vector<std::size_t> order(t.factors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

  std::optional<std::vector<IndexedFactor>> best;
  std::vector<std::size_t> choice(t.factors.size(), 0);
  do {
    // Enumerate the cartesian product of per-factor writings.
    std::fill(choice.begin(), choice.end(), 0);
    while (true) {
      std::vector<IndexedFactor> arranged;
      arranged.reserve(t.factors.size());
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const std::size_t f = order[pos];
        arranged.push_back(
            make_factor(t.factors[f].kind, writings[f][choice[f]]));
      }
      std::vector<IndexedFactor> candidate = rename_bound(arranged, occ);
      if (!best || candidate < *best) best = std::move(candidate);

      std::size_t bump = 0;
      while (bump < choice.size() && ++choice[bump] == writings[bump].size()) {
        choice[bump] = 0;
        ++bump;
      }
      if (bump == choice.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  t.factors = std::move(*best);
}

// Sort key ignoring the coefficient; terms with equal keys merge.
auto term_key(const TensorTerm& t) {
  return std::tie(t.s_power, t.tric2_power, t.riem2_power, t.factors);
}

TensorExpr combine(std::vector<TensorTerm> terms) {
  for (auto& t : terms) canonicalize_term(t);
  std::sort(terms.begin(), terms.end(), [](const TensorTerm& a, const TensorTerm& b) {
    return term_key(a) < term_key(b);
  });
  TensorExpr out;
  for (auto& t : terms) {
    if (t.coeff.is_zero()) continue;
    if (!out.terms().empty() && term_key(out.terms().back()) == term_key(t)) {
      out.terms().back().coeff += t.coeff;
      if (out.terms().back().coeff.is_zero()) out.terms().pop_back();
    } else {
      out.terms().push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

TensorExpr TensorExpr::scalar_monomial(const RationalFunctionN& coeff,
                                       int s_power, int tric2_power,
                                       int riem2_power) {
  TensorTerm t;
  t.coeff = coeff;
  t.s_power = s_power;
  t.tric2_power = tric2_power;
  t.riem2_power = riem2_power;
  return TensorExpr(std::move(t));
}

TensorExpr TensorExpr::scaled(const RationalFunctionN& c) const {
  TensorExpr out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

TensorExpr operator+(const TensorExpr& a, const TensorExpr& b) {
  TensorExpr out = a;
  out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
  return out;
}

TensorExpr operator-(const TensorExpr& a, const TensorExpr& b) {
  return a + b.scaled(RationalFunctionN(-1));
}

TensorExpr operator*(const TensorExpr& a, const TensorExpr& b) {
  TensorExpr out;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      TensorTerm t;
      t.coeff = ta.coeff * tb.coeff;
      t.s_power = ta.s_power + tb.s_power;
      t.tric2_power = ta.tric2_power + tb.tric2_power;
      t.riem2_power = ta.riem2_power + tb.riem2_power;
      t.factors = ta.factors;
      t.factors.insert(t.factors.end(), tb.factors.begin(), tb.factors.end());
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

namespace {

TensorExpr factor_expr(FactorKind kind, std::vector<std::string> indices) {
  TensorTerm t;
  t.factors.push_back(make_factor(kind, std::move(indices)));
  return TensorExpr(std::move(t));
}

}  // namespace

TensorExpr delta(const std::string& a, const std::string& b) {
  return factor_expr(FactorKind::Delta, {a, b});
}

TensorExpr traceless_ricci(const std::string& a, const std::string& b) {
  return factor_expr(FactorKind::TracelessRicci, {a, b});
}

TensorExpr ricci(const std::string& a, const std::string& b) {
  return factor_expr(FactorKind::Ricci, {a, b});
}

TensorExpr curvature(const std::string& a, const std::string& b,
                     const std::string& c, const std::string& d) {
  return factor_expr(FactorKind::Curvature, {a, b, c, d});
}

namespace {

void require_distinct(const std::string& i, const std::string& j,
                      const std::string& k, const std::string& l) {
  if (i == j || i == k || i == l || j == k || j == l || k == l) {
    throw DomainError("the four index names must be distinct");
  }
}

}  // namespace

TensorExpr build_S(const std::string& i, const std::string& j,
                   const std::string& k, const std::string& l) {
  require_distinct(i, j, k, l);
  // s/(2n(n+1)) (g_{ij'} g_{kl'} + g_{il'} g_{kj'})
  const RationalFunctionN coeff(PolyN(1),
                                2 * PolyN::n() * (PolyN::n() + 1));
  TensorExpr e = delta(i, j) * delta(k, l) + delta(i, l) * delta(k, j);
  e = e.scaled(coeff);
  for (auto& t : e.terms()) t.s_power += 1;
  return e;
}

TensorExpr build_P(const std::string& i, const std::string& j,
                   const std::string& k, const std::string& l) {
  require_distinct(i, j, k, l);
  // 1/(n+2) (g_{ij'} tr_{kl'} + g_{kl'} tr_{ij'} + g_{il'} tr_{kj'} + g_{kj'} tr_{il'})
  const RationalFunctionN coeff(PolyN(1), PolyN::n() + 2);
  TensorExpr e = delta(i, j) * traceless_ricci(k, l) +
                 delta(k, l) * traceless_ricci(i, j) +
                 delta(i, l) * traceless_ricci(k, j) +
                 delta(k, j) * traceless_ricci(i, l);
  return e.scaled(coeff);
}

TensorExpr build_R(const std::string& i, const std::string& j,
                   const std::string& k, const std::string& l) {
  require_distinct(i, j, k, l);
  return curvature(i, j, k, l);
}

TensorExpr contract(const TensorExpr& expr, const ContractOptions& opts) {
  std::optional<std::mt19937_64> rng;
  if (opts.shuffle_seed) rng.emplace(*opts.shuffle_seed);

  std::vector<TensorTerm> done;
  for (const auto& term : expr.terms()) {
    validate_term(term);
    std::vector<TensorTerm> stack{term};
    while (!stack.empty()) {
      TensorTerm t = std::move(stack.back());
      stack.pop_back();
      if (t.coeff.is_zero()) continue;
      const std::vector<Redex> redexes = find_redexes(t, rng.has_value());
      if (redexes.empty()) {
        done.push_back(std::move(t));
        continue;
      }
      std::size_t pick = 0;
      if (rng) {
        pick = std::uniform_int_distribution<std::size_t>(
            0, redexes.size() - 1)(*rng);
      }
      for (auto& result : apply_redex(std::move(t), redexes[pick])) {
        stack.push_back(std::move(result));
      }
    }
  }
  return combine(std::move(done));
}

TensorExpr canonical(const TensorExpr& expr) {
  return combine(expr.terms());
}

bool expr_equal(const TensorExpr& a, const TensorExpr& b) {
  return canonical(a - b).is_zero();
}

std::string to_string(const TensorExpr& expr) {
  if (expr.is_zero()) return "0";
  std::string out;
  for (const auto& t : expr.terms()) {
    if (!out.empty()) out += " + ";
    std::string parts;
    auto append = [&parts](const std::string& piece) {
      if (!parts.empty()) parts += " ";
      parts += piece;
    };
    if (t.s_power == 1) append("s");
    if (t.s_power > 1) append("s^" + std::to_string(t.s_power));
    if (t.tric2_power == 1) append("|tRic|^2");
    if (t.tric2_power > 1) append("(|tRic|^2)^" + std::to_string(t.tric2_power));
    if (t.riem2_power == 1) append("|R|^2");
    if (t.riem2_power > 1) append("(|R|^2)^" + std::to_string(t.riem2_power));
    for (const auto& f : t.factors) {
      std::string name;
      switch (f.kind) {
        case FactorKind::Delta: name = "g"; break;
        case FactorKind::TracelessRicci: name = "tr"; break;
        case FactorKind::Ricci: name = "r"; break;
        case FactorKind::Curvature: name = "Rm"; break;
      }
      name += "(";
      for (std::size_t s = 0; s < f.indices.size(); ++s) {
        if (s) name += ",";
        name += f.indices[s];
      }
      name += ")";
      append(name);
    }
    const std::string coeff = t.coeff.str();
    if (parts.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += parts;
    } else {
      out += "(" + coeff + ") " + parts;
    }
  }
  return out;
}

IdentityCheck check_contraction(const std::string& name, const TensorExpr& raw,
                                const TensorExpr& expected) {
  IdentityCheck check;
  check.name = name;
  check.computed = contract(raw);
  check.expected = canonical(expected);
  check.residual = canonical(check.computed - check.expected);
  check.pass = check.residual.is_zero();
  return check;
}

std::vector<IdentityCheck> verify_norm_identities() {
  const PolyN n = PolyN::n();
  std::vector<IdentityCheck> out;

  // |Ric|^2 = r_{ab'} r_{ba'} = |tRic|^2 + s^2/(4n)
  out.push_back(check_contraction(
      "ricci-norm", ricci("a", "b") * ricci("b", "a"),
      TensorExpr::scalar_monomial(RationalFunctionN(1), 0, 1) +
          TensorExpr::scalar_monomial(RationalFunctionN(PolyN(1), 4 * n), 2)));

  // |S|^2 = S_{ij'kl'} S_{ji'lk'} = s^2/(2n(n+1))
  out.push_back(check_contraction(
      "scalar-part-norm", build_S("i", "j", "k", "l") * build_S("j", "i", "l", "k"),
      TensorExpr::scalar_monomial(
          RationalFunctionN(PolyN(1), 2 * n * (n + 1)), 2)));

  // |P|^2 = P_{ij'kl'} P_{ji'lk'} = 4/(n+2) |tRic|^2
  out.push_back(check_contraction(
      "traceless-ricci-part-norm",
      build_P("i", "j", "k", "l") * build_P("j", "i", "l", "k"),
      TensorExpr::scalar_monomial(RationalFunctionN(PolyN(4), n + 2), 0, 1)));

  return out;
}

std::vector<IdentityCheck> verify_cross_terms() {
  const PolyN n = PolyN::n();
  const TensorExpr snorm = TensorExpr::scalar_monomial(
      RationalFunctionN(PolyN(1), 2 * n * (n + 1)), 2);
  const TensorExpr pnorm =
      TensorExpr::scalar_monomial(RationalFunctionN(PolyN(4), n + 2), 0, 1);

  std::vector<IdentityCheck> out;

  out.push_back(check_contraction(
      "scalar-traceless-orthogonality",
      build_S("i", "j", "k", "l") * build_P("j", "i", "l", "k"), TensorExpr()));

  out.push_back(check_contraction(
      "curvature-scalar-pairing",
      build_R("i", "j", "k", "l") * build_S("j", "i", "l", "k"), snorm));

  out.push_back(check_contraction(
      "curvature-traceless-pairing",
      build_R("i", "j", "k", "l") * build_P("j", "i", "l", "k"), pnorm));

  // |R - S - P|^2 = |R|^2 - |S|^2 - |P|^2, the substitution defining |B|^2.
  const TensorExpr lhs =
      (build_R("i", "j", "k", "l") - build_S("i", "j", "k", "l") -
       build_P("i", "j", "k", "l")) *
      (build_R("j", "i", "l", "k") - build_S("j", "i", "l", "k") -
       build_P("j", "i", "l", "k"));
  const TensorExpr rhs =
      TensorExpr::scalar_monomial(RationalFunctionN(1), 0, 0, 1) -
      snorm - pnorm;
  out.push_back(check_contraction("bochner-norm-substitution", lhs, rhs));

  return out;
}

}  // namespace kahlercalc
