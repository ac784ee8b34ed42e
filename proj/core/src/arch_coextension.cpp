#include "tnorm/arch_coextension.hpp"

#include <algorithm>  // for min, max
#include <cmath>      // for exp, log, pow
#include <limits>     // for numeric_limits
#include <string>     // for string, to_string

#include "tnorm/verify.hpp"  // for commuting_report

namespace tnorm {

  namespace {
    using CK = CompositionKind;

    constexpr double inf = std::numeric_limits<double>::infinity();

    std::string pair_name(std::size_t R, std::size_t T) {
      return "pair (" + std::to_string(R) + "," + std::to_string(T) + ")";
    }

    bool is_arch(CK k) {
      return k != CK::goedel && k != CK::reversedGoedel;
    }
  }  // namespace

  char const* to_string(FilterKind k) noexcept {
    return k == FilterKind::lukasiewiczFilter ? "lukasiewicz" : "product";
  }

  double filter_op(FilterKind kind, double f, double g) {
    if (kind == FilterKind::lukasiewiczFilter) {
      if (!(f >= 0 && f <= 1 && g >= 0 && g <= 1)) {
        throw Error("Lukasiewicz filter coordinates must lie in [0,1]");
      }
      return std::max(f - (1 - g), 0.0);
    }
    if (!(f > 0 && f <= 1 && g > 0 && g <= 1)) {
      throw Error("product filter coordinates must lie in (0,1]");
    }
    return f * g;
  }

  double rho_apply(CK cls, FilterKind filter, double alpha, double f, double r) {
    if (cls == CK::trivialSingleton) {
      return r;
    }
    if (!is_arch(cls)) {
      throw Error(std::string("no Archimedean action on a ") + to_string(cls) + " class");
    }
    if (!(alpha > 0)) {
      throw Error("alpha must be positive");
    }
    bool const luk = filter == FilterKind::lukasiewiczFilter;
    if (!(luk ? (f >= 0 && f <= 1) : (f > 0 && f <= 1))) {
      throw Error("filter coordinate " + std::to_string(f) + " out of range");
    }
    if (!canonical_interval(cls).contains(r)) {
      throw Error("class coordinate " + std::to_string(r) + " out of range");
    }
    if (luk) {
      if (cls != CK::lukasiewicz) {
        throw Error(std::string("a Lukasiewicz filter cannot act on a ") + to_string(cls)
                    + " class");
      }
      if (alpha < 1) {
        throw Error("alpha >= 1 required under a Lukasiewicz filter");
      }
      return std::max(r + alpha * (f - 1), 0.0);
    }
    switch (cls) {
      case CK::lukasiewicz:
        return std::max(r + alpha * std::log(f), 0.0);
      case CK::product:
        return std::pow(f, alpha) * r;
      case CK::reversedProduct:
        return std::max(1 - (1 - r) / std::pow(f, alpha), 0.0);
      case CK::power:
        return std::pow(r, 1 / std::pow(f, alpha));
      default:
        break;
    }
    throw Error("unreachable class kind");
  }

  PairCase pair_case(CK R, CK S, FilterKind filter, PairContext ctx) {
    using O = PairCase::Outcome;
    if (ctx != PairContext::maximal || R == CK::trivialSingleton
        || S == CK::trivialSingleton) {
      return {O::trivial, FamilyId::trivial};
    }
    if (!is_arch(R) || !is_arch(S)) {
      return {O::kindMismatch, FamilyId::trivial};
    }
    if (filter == FilterKind::lukasiewiczFilter) {
      if (R == CK::lukasiewicz && S == CK::lukasiewicz) {
        return {O::family, FamilyId::lukLuk};
      }
      return {O::kindMismatch, FamilyId::trivial};
    }
    switch (R) {
      case CK::lukasiewicz:
        switch (S) {
          case CK::lukasiewicz:
            return {O::family, FamilyId::lukLuk};
          case CK::reversedProduct:
            return {O::family, FamilyId::lukRprod};
          default:
            return {O::impossible, FamilyId::trivial};
        }
      case CK::product:
        switch (S) {
          case CK::lukasiewicz:
            return {O::family, FamilyId::prodLuk};
          case CK::product:
            return {O::family, FamilyId::prodProd};
          case CK::reversedProduct:
            return {O::family, FamilyId::prodRprod};
          default:
            return {O::family, FamilyId::prodPow};
        }
      case CK::reversedProduct:
        switch (S) {
          case CK::lukasiewicz:
            return {O::trivial, FamilyId::trivial};
          case CK::reversedProduct:
            return {O::family, FamilyId::rprodRprod};
          default:
            return {O::impossible, FamilyId::trivial};
        }
      case CK::power:
        switch (S) {
          case CK::lukasiewicz:
            return {O::trivial, FamilyId::trivial};
          case CK::product:
            return {O::impossible, FamilyId::trivial};
          case CK::reversedProduct:
            return {O::family, FamilyId::powRprod};
          default:
            return {O::family, FamilyId::powPow};
        }
      default:
        break;
    }
    return {O::kindMismatch, FamilyId::trivial};
  }

  ParamDomain param_domain(FamilyId family, double k) {
    switch (family) {
      case FamilyId::lukLuk:
        return {-k, true, std::min(1 - k, 0.0), true};
      case FamilyId::lukRprod:
        return {-1, true, 0, true};
      case FamilyId::prodLuk:
        return {0, true, 1, true};
      case FamilyId::prodProd:
      case FamilyId::rprodRprod:
        return {0, false, 1, true};
      case FamilyId::prodRprod:
        return {1, true, inf, false};
      case FamilyId::prodPow:
      case FamilyId::powPow:
        return {0, false, 1, false};
      case FamilyId::powRprod:
        return {0, false, inf, false};
      default:
        break;
    }
    throw Error(std::string("no Archimedean parameter domain for ") + to_string(family));
  }

  bool bottom_allowed(FamilyId family) noexcept {
    // the constant bottom map is excluded exactly when S has a bottom but
    // neither R nor S has a top
    switch (family) {
      case FamilyId::lukLuk:
      case FamilyId::lukRprod:
      case FamilyId::prodLuk:
      case FamilyId::prodRprod:
        return true;
      default:
        return false;
    }
  }

  CK family_source(FamilyId family) noexcept {
    switch (family) {
      case FamilyId::lukLuk:
      case FamilyId::lukRprod:
        return CK::lukasiewicz;
      case FamilyId::prodLuk:
      case FamilyId::prodProd:
      case FamilyId::prodRprod:
      case FamilyId::prodPow:
        return CK::product;
      case FamilyId::rprodRprod:
        return CK::reversedProduct;
      case FamilyId::powRprod:
      case FamilyId::powPow:
        return CK::power;
      case FamilyId::goedelGoedel:
      case FamilyId::goedelRgoedel:
        return CK::goedel;
      case FamilyId::rgoedelRgoedel:
        return CK::reversedGoedel;
      case FamilyId::trivial:
        break;
    }
    return CK::trivialSingleton;
  }

  CK family_target(FamilyId family) noexcept {
    switch (family) {
      case FamilyId::lukLuk:
      case FamilyId::prodLuk:
        return CK::lukasiewicz;
      case FamilyId::prodProd:
        return CK::product;
      case FamilyId::lukRprod:
      case FamilyId::prodRprod:
      case FamilyId::rprodRprod:
      case FamilyId::powRprod:
        return CK::reversedProduct;
      case FamilyId::prodPow:
      case FamilyId::powPow:
        return CK::power;
      case FamilyId::goedelGoedel:
        return CK::goedel;
      case FamilyId::goedelRgoedel:
      case FamilyId::rgoedelRgoedel:
        return CK::reversedGoedel;
      case FamilyId::trivial:
        break;
    }
    return CK::trivialSingleton;
  }

  double lambda_rs_apply(FamilyId family, double alphaR, double alphaS, double z, double r) {
    if (!(alphaR > 0 && alphaS > 0)) {
      throw Error("alpha must be positive");
    }
    double const      k   = alphaS / alphaR;
    ParamDomain const dom = param_domain(family, k);
    if (!dom.contains(z)) {
      throw Error(std::string("parameter ") + std::to_string(z) + " outside the range of "
                  + to_string(family));
    }
    if (!canonical_interval(family_source(family)).contains(r)) {
      throw Error("coordinate " + std::to_string(r) + " outside the source class");
    }
    double v = 0;
    switch (family) {
      case FamilyId::lukLuk:
        v = std::max(k * r + z, 0.0);
        break;
      case FamilyId::lukRprod:
        v = std::max(1 - std::exp(-k * (r + z)), 0.0);
        break;
      case FamilyId::prodLuk:
        v = std::max(k * std::log(r) + z, 0.0);
        break;
      case FamilyId::prodProd:
        v = z * std::pow(r, k);
        break;
      case FamilyId::prodRprod:
        v = std::max(1 - 1 / (z * std::pow(r, k)), 0.0);
        break;
      case FamilyId::prodPow:
        v = std::pow(z, std::pow(r, -k));
        break;
      case FamilyId::rprodRprod:
        v = std::max(1 - std::pow(1 - r, k) / z, 0.0);
        break;
      case FamilyId::powRprod:
        v = std::max(1 - std::pow(-std::log(r), k) / z, 0.0);
        break;
      case FamilyId::powPow:
        v = std::pow(z, std::pow(-std::log(r), k));
        break;
      default:
        throw Error("not an Archimedean family");
    }
    return clamp_local(v);
  }

  ////////////////////////////////////////////////////////////////////////
  // Spec validation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool thin(ClassShape const& c) {
      return c.is_singleton() || c.chain;
    }

    std::vector<CK> class_kinds(IntervalPartition const& p) {
      std::vector<CK> kinds;
      for (ClassShape const& c : p.classes) {
        kinds.push_back(thin(c) ? CK::trivialSingleton : archimedean_kind(c));
      }
      return kinds;
    }

    void check_pair_line(ValidationReport&          rep,
                         ArchCoextensionSpec const& spec,
                         std::vector<CK> const&     kinds,
                         PairFamily const&          pf,
                         std::size_t                S) {
      std::string const at = pair_name(pf.R, pf.T) + ": ";
      double const k = *spec.alpha[S] / *spec.alpha[pf.R];
      ParamDomain const dom = param_domain(pf.family, k);
      if (pf.m) {
        bool const unbounded = *pf.m == inf && dom.hi == inf;
        if (!unbounded && !dom.contains(*pf.m)) {
          rep.add(at + "cap m = " + std::to_string(*pf.m) + " outside the parameter range");
        }
      }
      if (!pf.zmap.monotone()) {
        rep.add(at + "zmap is not monotone");
      }
      if (!pf.sprime.empty()) {
        rep.add(at + "a parameter set only applies to goedel-rgoedel pairs");
      }
      for (double t : sample_unit(canonical_interval(kinds[pf.T]), 64)) {
        double z = pf.zmap(t);
        if (pf.m) {
          z = std::min(z, *pf.m);
        }
        if (dom.below(z)) {
          if (!bottom_allowed(pf.family)) {
            rep.add(at + "zmap(" + std::to_string(t) + ") = " + std::to_string(z)
                    + " below the parameter range");
            return;
          }
        } else if (!dom.contains(z)) {
          rep.add(at + "zmap(" + std::to_string(t) + ") = " + std::to_string(z)
                  + " outside the parameter range");
          return;
        }
      }
    }
  }  // namespace

  ValidationReport validate_spec(ArchCoextensionSpec const& spec) {
    ValidationReport rep;
    IntervalPartition const& p = spec.partition;
    if (p.classes.empty()) {
      rep.add("partition has no classes");
      return rep;
    }
    for (std::string const& s : validate(p).issues) {
      rep.add(s);
    }
    std::size_t const n = p.size();
    std::size_t const F = n - 1;
    if (spec.quotient.size() != n) {
      rep.add("quotient has " + std::to_string(spec.quotient.size())
              + " elements but the partition has " + std::to_string(n) + " classes");
      return rep;
    }
    if (spec.alpha.size() != n) {
      rep.add("expected one alpha slot per class");
      return rep;
    }
    if (spec.quotient.is_finite()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i].chain) {
          rep.add("class " + std::to_string(i) + ": chain classes need a t-norm quotient");
        }
      }
    }

    ClassShape const& fc  = p[F];
    bool const        luk = spec.filterKind == FilterKind::lukasiewiczFilter;
    if (fc.is_singleton()) {
      rep.add("singleton filter class: the filter must be non-trivial");
    } else if (fc.chain) {
      rep.add("the filter class cannot be a chain class");
    } else if (!fc.rightClosed || fc.leftClosed != luk) {
      rep.add(std::string("filter class shape does not match a ") + to_string(spec.filterKind)
              + " filter");
    }
    if (spec.alpha[F]) {
      rep.add("alpha given for the filter class");
    }

    std::vector<CK> const kinds = class_kinds(p);
    for (std::size_t i = 0; i < F; ++i) {
      std::string const at = "class " + std::to_string(i) + ": ";
      if (thin(p[i])) {
        if (spec.alpha[i]) {
          rep.add(at + "alpha given for a singleton class");
        }
        continue;
      }
      if (luk && kinds[i] != CK::lukasiewicz) {
        rep.add(at + to_string(kinds[i]) + " class cannot carry a Lukasiewicz filter action");
      }
      if (!spec.alpha[i]) {
        rep.add(at + "missing alpha");
      } else if (!(*spec.alpha[i] > 0)) {
        rep.add(at + "alpha must be positive");
      } else if (luk && *spec.alpha[i] < 1) {
        rep.add(at + "alpha >= 1 required under a Lukasiewicz filter");
      }
    }
    if (!rep.ok()) {
      return rep;
    }

    // pair lines
    std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
      PairFamily const& pf = spec.pairs[i];
      if (pf.R >= F || pf.T >= F) {
        rep.add(pair_name(pf.R, pf.T) + ": classes must lie below the filter class");
      } else if (pf.R < pf.T) {
        rep.add(pair_name(pf.R, pf.T) + ": list the larger class first");
      } else if (index[pf.R][pf.T] >= 0) {
        rep.add(pair_name(pf.R, pf.T) + ": duplicate pair line");
      } else {
        index[pf.R][pf.T] = static_cast<int>(i);
      }
    }

    QuotientModel const& q = spec.quotient;
    for (std::size_t R = 0; R < F; ++R) {
      for (std::size_t T = 0; T <= R; ++T) {
        int const         line = index[R][T];
        std::string const at   = pair_name(R, T) + ": ";
        if (thin(p[R]) || thin(p[T])) {
          if (q.is_finite()) {
            std::size_t S = q.class_product(R, T);
            if (!thin(p[S]) && !p[S].has_min()) {
              rep.add(at + "trivial but class " + std::to_string(S)
                      + " lacks a smallest element");
            }
          }
          if (line >= 0 && spec.pairs[line].family != FamilyId::trivial) {
            rep.add(at + "a singleton class forces a trivial pair");
          }
          continue;
        }
        std::size_t const S = q.class_product(R, T);
        if (thin(p[S])) {
          if (line >= 0 && spec.pairs[line].family != FamilyId::trivial) {
            rep.add(at + "a singleton product class forces a trivial pair");
          }
          continue;
        }
        PairContext const ctx =
            q.is_maximal(R, T) ? PairContext::maximal : PairContext::nonMaximal;
        PairCase const c1 = pair_case(kinds[R], kinds[S], spec.filterKind, ctx);
        PairCase const c2 = pair_case(kinds[T], kinds[S], spec.filterKind, ctx);
        using O           = PairCase::Outcome;
        if (c1.outcome == O::impossible || c2.outcome == O::impossible) {
          CK const from = c1.outcome == O::impossible ? kinds[R] : kinds[T];
          rep.add(at + "impossible combination " + to_string(from) + " -> "
                  + to_string(kinds[S]));
          continue;
        }
        if (c1.outcome == O::kindMismatch || c2.outcome == O::kindMismatch) {
          rep.add(at + "class kinds do not fit the filter");
          continue;
        }
        if (c1.outcome == O::trivial || c2.outcome == O::trivial) {
          if (!p[S].has_min()) {
            rep.add(at + "trivial but class " + std::to_string(S)
                    + " lacks a smallest element");
          }
          if (line >= 0 && spec.pairs[line].family != FamilyId::trivial) {
            rep.add(at + "pair is trivial, got family " + to_string(spec.pairs[line].family));
          }
          continue;
        }
        if (line < 0) {
          rep.add(at + "missing family " + to_string(c1.family));
          continue;
        }
        PairFamily const& pf = spec.pairs[line];
        if (pf.family == FamilyId::trivial) {
          // a trivial choice is always admissible when S has a bottom
          if (!p[S].has_min()) {
            rep.add(at + "trivial but class " + std::to_string(S)
                    + " lacks a smallest element");
          }
          continue;
        }
        if (pf.family != c1.family) {
          rep.add(at + "family " + to_string(pf.family) + " does not match the class kinds, expected "
                  + to_string(c1.family));
          continue;
        }
        check_pair_line(rep, spec, kinds, pf, S);
      }
    }
    if (!rep.ok()) {
      return rep;
    }

    // the class of every product must be the quotient's product class
    ArchCoextension const e(spec, ArchCoextension::Unchecked{});
    std::string const     bad =
        quotient_consistency(q, p, [&e](double a, double b) { return e.evaluate(a, b); });
    if (!bad.empty()) {
      rep.add(bad);
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  ArchCoextension::ArchCoextension(ArchCoextensionSpec spec) {
    ValidationReport rep = validate_spec(spec);
    if (!rep.ok()) {
      throw Error("invalid coextension spec: " + rep.str());
    }
    _spec = std::move(spec);
    compile();
  }

  ArchCoextension::ArchCoextension(ArchCoextensionSpec spec, Unchecked)
      : _spec(std::move(spec)) {
    compile();
  }

  void ArchCoextension::compile() {
    std::size_t const n = _spec.partition.size();
    _kinds              = class_kinds(_spec.partition);
    _pairIndex.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < _spec.pairs.size(); ++i) {
      PairFamily const& pf = _spec.pairs[i];
      if (pf.R < n && pf.T < n) {
        _pairIndex[pf.R][pf.T] = static_cast<int>(i);
      }
    }
  }

  FamilyId ArchCoextension::family(std::size_t R, std::size_t T) const {
    int const i = _pairIndex.at(R).at(T);
    return i < 0 ? FamilyId::trivial : _spec.pairs[i].family;
  }

  double ArchCoextension::evaluate(double a, double b) const {
    IntervalPartition const& p = _spec.partition;
    Dispatch const           d = dispatch(_spec.quotient, p, a, b);

    auto bottom = [&p](std::size_t S) {
      if (!p[S].has_min()) {
        throw Error("class " + std::to_string(S) + " has no smallest element");
      }
      return p[S].lo;
    };

    switch (d.kind) {
      case Dispatch::Kind::value:
        return d.value;
      case Dispatch::Kind::filterFilter:
        return place(p[d.S], filter_op(_spec.filterKind, d.r, d.t));
      case Dispatch::Kind::filterAction:
        return place(
            p[d.S], rho_apply(_kinds[d.S], _spec.filterKind, *_spec.alpha[d.S], d.r, d.t));
      case Dispatch::Kind::bottom:
        return bottom(d.S);
      case Dispatch::Kind::pair:
        break;
    }

    int const idx = _pairIndex[d.R][d.T];
    if (idx < 0 || _spec.pairs[idx].family == FamilyId::trivial) {
      return bottom(d.S);
    }
    PairFamily const& pf     = _spec.pairs[idx];
    double const      alphaR = *_spec.alpha[d.R];
    double const      alphaS = *_spec.alpha[d.S];
    double            z      = pf.zmap(d.t);
    if (pf.m) {
      z = std::min(z, *pf.m);
    }
    if (param_domain(pf.family, alphaS / alphaR).below(z)) {
      return bottom(d.S);
    }
    return place(p[d.S], lambda_rs_apply(pf.family, alphaR, alphaS, z, d.r));
  }

  GridReport verify_commuting(ArchCoextension const& c, std::size_t sampleCount) {
    return commuting_report([&c](double a, double b) { return c.evaluate(a, b); },
                            c.spec().partition,
                            sampleCount);
  }

}  // namespace tnorm
