#include "tnorm/semilattice_coextension.hpp"

#include <algorithm>  // for min, any_of
#include <cmath>      // for abs
#include <sstream>    // for ostringstream
#include <string>     // for string, to_string

namespace tnorm {

  namespace {
    using CK = CompositionKind;

    std::string num(double x) {
      std::ostringstream os;
      os.precision(12);
      os << x;
      return os.str();
    }

    std::string pair_name(std::size_t R, std::size_t T) {
      return "pair (" + std::to_string(R) + "," + std::to_string(T) + ")";
    }

    bool is_semi(CK k) {
      return k == CK::goedel || k == CK::reversedGoedel || k == CK::trivialSingleton;
    }

    bool thin(ClassShape const& c) {
      return c.is_singleton() || c.chain;
    }

    // every point of part lies in host
    bool inside(ClassShape const& part, ClassShape const& host) {
      if (part.is_singleton()) {
        return host.contains(part.lo);
      }
      bool const lo = part.leftClosed ? host.contains(part.lo) : part.lo >= host.lo;
      bool const hi = part.rightClosed ? host.contains(part.hi) : part.hi <= host.hi;
      return lo && hi && part.lo < part.hi;
    }

    // some interval part accumulates to x from below
    bool approached_from_below(FixpointSet const& E, double x) {
      return std::any_of(E.parts.begin(), E.parts.end(), [x](ClassShape const& c) {
        return !c.is_singleton() && c.lo < x && c.hi >= x;
      });
    }
  }  // namespace

  bool FixpointSet::contains(double x) const noexcept {
    return std::any_of(
        parts.begin(), parts.end(), [x](ClassShape const& c) { return c.contains(x); });
  }

  double idempotent_apply(FixpointSet const& E, double a) {
    if (!E.host.contains(a)) {
      throw Error("argument " + num(a) + " outside the host chain");
    }
    if (E.contains(a)) {
      return a;
    }
    // a is not a member: the answer is the largest right end below a
    bool   found = false;
    double sup   = 0;
    for (ClassShape const& c : E.parts) {
      if (c.hi <= a && (!found || c.hi > sup)) {
        sup   = c.hi;
        found = true;
      }
    }
    if (!found || !E.contains(sup)) {
      throw Error("no largest member below " + num(a));
    }
    return sup;
  }

  ValidationReport validate_E(FixpointSet const& E) {
    ValidationReport   rep;
    ClassShape const&  h = E.host;
    for (ClassShape const& c : E.parts) {
      if (!inside(c, h)) {
        rep.add("component " + num(c.lo) + ".." + num(c.hi) + " not inside the host");
      }
    }
    if (!rep.ok()) {
      return rep;
    }
    for (ClassShape const& c : E.parts) {
      if (!c.is_singleton() && !c.rightClosed && h.contains(c.hi) && !E.contains(c.hi)) {
        rep.add("E1: supremum " + num(c.hi) + " is not a member");
      }
      bool const hasLeftEnd = c.is_singleton() || c.leftClosed;
      bool const limitPoint = !(h.leftClosed && c.lo == h.lo);
      if (hasLeftEnd && limitPoint && !approached_from_below(E, c.lo)) {
        rep.add("E2: member " + num(c.lo) + " is not a supremum of smaller members");
      }
    }
    if (h.is_singleton() || h.leftClosed) {
      if (!E.parts.empty() && !E.contains(h.lo)) {
        double lowest = h.hi;
        for (ClassShape const& c : E.parts) {
          lowest = std::min(lowest, c.lo);
        }
        rep.add("E3: no member below " + num((h.lo + lowest) / 2));
      }
    } else {
      bool const reaches = std::any_of(E.parts.begin(), E.parts.end(), [&h](ClassShape const& c) {
        return !c.is_singleton() && c.lo == h.lo;
      });
      if (!reaches) {
        double lowest = h.hi;
        for (ClassShape const& c : E.parts) {
          lowest = std::min(lowest, c.lo);
        }
        rep.add("E3: no member below " + num((h.lo + lowest) / 2));
      }
    }
    if (E.parts.empty() && rep.ok()) {
      rep.add("E3: the fixpoint set is empty");
    }
    return rep;
  }

  double goedel_apply(Orientation o, double f, double r) {
    if (!(f >= 0 && f <= 1 && r >= 0 && r <= 1)) {
      throw Error("Goedel action coordinates must lie in [0,1]");
    }
    if (o == Orientation::preserving) {
      return std::min(r, f);
    }
    return sum_at_most_one(r, f) ? 0.0 : r;
  }

  FamilyId pair_case_semilattice(CK R, CK S, SemiContext ctx) {
    if (!is_semi(R) || !is_semi(S)) {
      throw Error(std::string("not a semilattice kind: ") + to_string(is_semi(R) ? S : R));
    }
    if (ctx != SemiContext::maximal || R == CK::trivialSingleton || S == CK::trivialSingleton) {
      return FamilyId::trivial;
    }
    if (R == CK::goedel) {
      return S == CK::goedel ? FamilyId::goedelGoedel : FamilyId::goedelRgoedel;
    }
    return S == CK::reversedGoedel ? FamilyId::rgoedelRgoedel : FamilyId::trivial;
  }

  double lambda_rs_semilattice(FamilyId family, double z, double r) {
    if (!(z >= 0 && z <= 1)) {
      throw Error("parameter " + num(z) + " outside [0,1]");
    }
    if (!(r >= 0 && r <= 1)) {
      throw Error("coordinate " + num(r) + " outside [0,1]");
    }
    switch (family) {
      case FamilyId::goedelGoedel:
        return std::min(r, z);
      case FamilyId::goedelRgoedel:
        return sum_at_most_one(r, z) ? 0.0 : z;
      case FamilyId::rgoedelRgoedel:
        return r <= z ? 0.0 : r;
      default:
        break;
    }
    throw Error(std::string("not a semilattice family: ") + to_string(family));
  }

  ////////////////////////////////////////////////////////////////////////
  // Spec validation
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<CK> class_kinds(SemiCoextensionSpec const& spec) {
      std::vector<CK>          kinds;
      IntervalPartition const& p = spec.partition;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (thin(p[i]) || i + 1 == p.size() || i >= spec.nu.size() || !spec.nu[i]) {
          kinds.push_back(CK::trivialSingleton);
        } else {
          kinds.push_back(*spec.nu[i] == Orientation::preserving ? CK::goedel
                                                                  : CK::reversedGoedel);
        }
      }
      return kinds;
    }

    bool in_sprime(std::vector<double> const& sprime, double z) {
      return std::any_of(sprime.begin(), sprime.end(), [z](double s) {
        return std::abs(s - z) <= 1e-12;
      });
    }

    UnitInterval unit_of(ClassShape const& c) {
      return {c.leftClosed, c.rightClosed};
    }

    void check_pair_line(ValidationReport&        rep,
                         IntervalPartition const& p,
                         PairFamily const&        pf,
                         std::size_t              S) {
      std::string const at = pair_name(pf.R, pf.T) + ": ";
      if (!pf.zmap.monotone()) {
        rep.add(at + "zmap is not monotone");
      }
      bool const two = pf.family == FamilyId::goedelRgoedel;
      if (!two && !pf.sprime.empty()) {
        rep.add(at + "a parameter set only applies to goedel-rgoedel pairs");
      }
      if (two && !pf.sprime.empty() && !in_sprime(pf.sprime, 0)) {
        rep.add(at + "the parameter set must contain 0");
      }
      if (pf.m && !(*pf.m >= 0 && *pf.m <= 1)) {
        rep.add(at + "cap m = " + num(*pf.m) + " outside [0,1]");
        return;
      }
      UnitInterval const target = unit_of(p[S]);
      for (double t : sample_unit(unit_of(p[pf.T]), 64)) {
        double z = pf.zmap(t);
        if (pf.m) {
          z = std::min(z, *pf.m);
        }
        bool ok = true;
        switch (pf.family) {
          case FamilyId::goedelGoedel:
            ok = target.contains(z);
            break;
          case FamilyId::goedelRgoedel:
            ok = pf.sprime.empty() ? target.contains(z) : in_sprime(pf.sprime, z);
            break;
          default:
            ok = z >= 0 && z <= 1;
            break;
        }
        if (!ok) {
          rep.add(at + "zmap(" + num(t) + ") = " + num(z) + " outside the parameter set");
          return;
        }
      }
    }
  }  // namespace

  ValidationReport validate_spec(SemiCoextensionSpec const& spec) {
    ValidationReport         rep;
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
    if (spec.nu.size() != n) {
      rep.add("expected one orientation slot per class");
      return rep;
    }
    if (spec.quotient.is_finite()) {
      for (std::size_t i = 0; i < n; ++i) {
        if (p[i].chain) {
          rep.add("class " + std::to_string(i) + ": chain classes need a t-norm quotient");
        }
      }
    }

    ClassShape const& fc = p[F];
    if (fc.is_singleton()) {
      rep.add("singleton filter class: the filter must be non-trivial");
    } else if (fc.chain) {
      rep.add("the filter class cannot be a chain class");
    } else if (!fc.rightClosed) {
      rep.add("filter class shape does not match a semilattice filter");
    }
    if (spec.nu[F]) {
      rep.add("orientation given for the filter class");
    }
    bool const filterBottom = fc.has_min();

    for (std::size_t i = 0; i < F; ++i) {
      std::string const at = "class " + std::to_string(i) + ": ";
      if (thin(p[i])) {
        if (spec.nu[i]) {
          rep.add(at + "orientation given for a singleton class");
        }
        continue;
      }
      if (!spec.nu[i]) {
        rep.add(at + "missing orientation");
        continue;
      }
      try {
        semilattice_kind(p[i], *spec.nu[i]);
      } catch (Error const& e) {
        rep.add(at + e.what());
        continue;
      }
      // nu must be a bijection from the filter onto the class
      if (*spec.nu[i] == Orientation::preserving) {
        if (!p[i].rightClosed || p[i].leftClosed != filterBottom) {
          rep.add(at + "goedel class shape does not match the filter");
        }
      } else if (!p[i].leftClosed || p[i].rightClosed != filterBottom) {
        rep.add(at + "reversed-goedel class shape does not match the filter");
      }
    }
    if (!rep.ok()) {
      return rep;
    }

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

    std::vector<CK> const kinds = class_kinds(spec);
    QuotientModel const&  q     = spec.quotient;
    for (std::size_t R = 0; R < F; ++R) {
      for (std::size_t T = 0; T <= R; ++T) {
        int const         line = index[R][T];
        std::string const at   = pair_name(R, T) + ": ";
        bool const        hasFamily =
            line >= 0 && spec.pairs[line].family != FamilyId::trivial;
        if (thin(p[R]) || thin(p[T])) {
          if (q.is_finite()) {
            std::size_t S = q.class_product(R, T);
            if (!thin(p[S]) && !p[S].has_min()) {
              rep.add(at + "trivial but class " + std::to_string(S)
                      + " lacks a smallest element");
            }
          }
          if (hasFamily) {
            rep.add(at + "a singleton class forces a trivial pair");
          }
          continue;
        }
        std::size_t const S = q.class_product(R, T);
        if (thin(p[S])) {
          if (hasFamily) {
            rep.add(at + "a singleton product class forces a trivial pair");
          }
          continue;
        }
        SemiContext const ctx =
            q.is_maximal(R, T) ? SemiContext::maximal : SemiContext::nonMaximal;
        FamilyId const c1 = pair_case_semilattice(kinds[R], kinds[S], ctx);
        FamilyId const c2 = pair_case_semilattice(kinds[T], kinds[S], ctx);
        if (c1 == FamilyId::trivial || c2 == FamilyId::trivial || !hasFamily) {
          if (!p[S].has_min()) {
            rep.add(at + "trivial but class " + std::to_string(S)
                    + " lacks a smallest element");
          }
          if (hasFamily && (c1 == FamilyId::trivial || c2 == FamilyId::trivial)) {
            rep.add(at + "pair is trivial, got family " + to_string(spec.pairs[line].family));
          }
          continue;
        }
        PairFamily const& pf = spec.pairs[line];
        if (pf.family != c1) {
          rep.add(at + "family " + to_string(pf.family)
                  + " does not match the class kinds, expected " + to_string(c1));
          continue;
        }
        check_pair_line(rep, p, pf, S);
      }
    }
    if (!rep.ok()) {
      return rep;
    }

    SemiCoextension const e(spec, SemiCoextension::Unchecked{});
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

  SemiCoextension::SemiCoextension(SemiCoextensionSpec spec) {
    ValidationReport rep = validate_spec(spec);
    if (!rep.ok()) {
      throw Error("invalid coextension spec: " + rep.str());
    }
    _spec = std::move(spec);
    compile();
  }

  SemiCoextension::SemiCoextension(SemiCoextensionSpec spec, Unchecked)
      : _spec(std::move(spec)) {
    compile();
  }

  void SemiCoextension::compile() {
    std::size_t const n = _spec.partition.size();
    _kinds              = class_kinds(_spec);
    _pairIndex.assign(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < _spec.pairs.size(); ++i) {
      PairFamily const& pf = _spec.pairs[i];
      if (pf.R < n && pf.T < n) {
        _pairIndex[pf.R][pf.T] = static_cast<int>(i);
      }
    }
  }

  double SemiCoextension::evaluate(double a, double b) const {
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
        return place(p[d.S], std::min(d.r, d.t));
      case Dispatch::Kind::filterAction:
        return place(p[d.S], goedel_apply(*_spec.nu[d.S], d.r, d.t));
      case Dispatch::Kind::bottom:
        return bottom(d.S);
      case Dispatch::Kind::pair:
        break;
    }

    int const idx = _pairIndex[d.R][d.T];
    if (idx < 0 || _spec.pairs[idx].family == FamilyId::trivial) {
      return bottom(d.S);
    }
    PairFamily const& pf = _spec.pairs[idx];
    double            z  = pf.zmap(d.t);
    if (pf.m) {
      z = std::min(z, *pf.m);
    }
    return place(p[d.S], lambda_rs_semilattice(pf.family, clamp_local(z), d.r));
  }

  FixpointSet SemiCoextension::fixpoints(double f, std::size_t cls) const {
    IntervalPartition const& p = _spec.partition;
    ClassShape const&        c = p.classes.at(cls);
    FixpointSet              E;
    E.host = c;
    if (thin(c) || cls + 1 == p.size()) {
      // singletons are fixed; in the filter class f acts as a minimum
      if (thin(c)) {
        E.parts.push_back(c);
      } else {
        double const cut = to_global(c, f);
        E.parts.push_back(cut > c.lo ? ClassShape::interval(c.lo, cut, c.leftClosed, true)
                                     : ClassShape::point(c.lo));
      }
      return E;
    }
    double const cut = to_global(c, *_spec.nu[cls] == Orientation::preserving ? f : 1 - f);
    if (*_spec.nu[cls] == Orientation::preserving) {
      if (cut > c.lo) {
        E.parts.push_back(ClassShape::interval(c.lo, cut, c.leftClosed, true));
      } else {
        E.parts.push_back(ClassShape::point(c.lo));
      }
    } else {
      E.parts.push_back(ClassShape::point(c.lo));
      if (cut < c.hi) {
        E.parts.push_back(ClassShape::interval(cut, c.hi, false, c.rightClosed));
      }
    }
    return E;
  }

}  // namespace tnorm
