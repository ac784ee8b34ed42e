#include "tnorm/quotient_model.hpp"

#include <algorithm>  // for swap
#include <array>      // for array
#include <string>     // for to_string
#include <cmath>      // for nextafter
#include <utility>    // for pair

namespace tnorm {

  namespace {
    constexpr std::array<std::pair<FamilyId, char const*>, 13> family_names{{
        {FamilyId::trivial, "trivial"},
        {FamilyId::lukLuk, "luk-luk"},
        {FamilyId::lukRprod, "luk-rprod"},
        {FamilyId::prodLuk, "prod-luk"},
        {FamilyId::prodProd, "prod-prod"},
        {FamilyId::prodRprod, "prod-rprod"},
        {FamilyId::prodPow, "prod-pow"},
        {FamilyId::rprodRprod, "rprod-rprod"},
        {FamilyId::powRprod, "pow-rprod"},
        {FamilyId::powPow, "pow-pow"},
        {FamilyId::goedelGoedel, "goedel-goedel"},
        {FamilyId::goedelRgoedel, "goedel-rgoedel"},
        {FamilyId::rgoedelRgoedel, "rgoedel-rgoedel"},
    }};

    constexpr double residuum_tol = 1e-9;
  }  // namespace

  char const* to_string(FamilyId f) noexcept {
    for (auto const& [id, name] : family_names) {
      if (id == f) {
        return name;
      }
    }
    return "?";
  }

  std::optional<FamilyId> family_from_string(std::string const& s) noexcept {
    for (auto const& [id, name] : family_names) {
      if (s == name) {
        return id;
      }
    }
    return std::nullopt;
  }

  QuotientModel::QuotientModel(FiniteTomonoid t)
      : _finite(std::move(t)), _classes(_finite->size()) {
    _chain.assign(_classes, false);
    _maximal.assign(_classes, std::vector<char>(_classes, 0));
    for (std::size_t i = 0; i < _classes; ++i) {
      for (std::size_t j = 0; j < _classes; ++j) {
        _maximal[i][j] = is_maximal_pair(*_finite, i, j);
      }
    }
  }

  QuotientModel::QuotientModel(TnormFn                  base,
                               std::vector<double>      anchors,
                               IntervalPartition const& p)
      : _base(std::move(base)), _anchors(std::move(anchors)), _classes(p.size()) {
    if (_anchors.size() != _classes) {
      throw Error("expected one anchor per class");
    }
    _chain.resize(_classes);
    for (std::size_t i = 0; i < _classes; ++i) {
      _chain[i] = p[i].chain;
    }
    if (_chain.front() || _chain.back()) {
      throw Error("the first and last class cannot be chain classes");
    }
    double prev = -1;
    for (std::size_t i = 0; i < _classes; ++i) {
      if (_chain[i]) {
        if (_chain[i - 1] || _chain[i + 1]) {
          throw Error("chain classes must sit between two anchored classes");
        }
        continue;
      }
      if (!(_anchors[i] > prev)) {
        throw Error("class anchors must increase");
      }
      prev = _anchors[i];
    }
    if (_anchors.front() != 0 || _anchors.back() != 1) {
      throw Error("anchors must start at 0 and end at 1");
    }

    // sup { c : base(y, c) <= s } by bisection; base is monotone and
    // left-continuous, so this is the residuum
    auto res = [this](double y, double s) {
      if (_base(y, 1.0) <= s) {
        return 1.0;
      }
      double lo = 0, hi = 1;
      for (int k = 0; k < 80; ++k) {
        double mid = 0.5 * (lo + hi);
        (_base(y, mid) <= s ? lo : hi) = mid;
      }
      return lo;
    };
    _maximal.assign(_classes, std::vector<char>(_classes, 0));
    for (std::size_t i = 0; i < _classes; ++i) {
      for (std::size_t j = 0; j < _classes; ++j) {
        if (_chain[i] || _chain[j]) {
          continue;
        }
        double s       = _base(_anchors[i], _anchors[j]);
        _maximal[i][j] = res(_anchors[j], s) <= _anchors[i] + residuum_tol
                         && res(_anchors[i], s) <= _anchors[j] + residuum_tol;
      }
    }
  }

  double QuotientModel::collapse(Located const& x) const {
    if (is_finite()) {
      return static_cast<double>(x.cls);
    }
    if (_chain[x.cls]) {
      double lo = _anchors[x.cls - 1];
      double hi = _anchors[x.cls + 1];
      return lo + x.local * (hi - lo);
    }
    return _anchors[x.cls];
  }

  Located QuotientModel::uncollapse(double s) const {
    for (std::size_t i = 0; i < _classes; ++i) {
      if (_chain[i]) {
        double lo = _anchors[i - 1];
        double hi = _anchors[i + 1];
        if (lo < s && s < hi) {
          return {i, (s - lo) / (hi - lo)};
        }
      } else if (_anchors[i] == s) {
        return {i, 0.0};
      }
    }
    throw Error("base product " + std::to_string(s) + " falls between anchored classes");
  }

  Located QuotientModel::multiply(Located const& x, Located const& y) const {
    if (is_finite()) {
      return {(*_finite)(x.cls, y.cls), 0.0};
    }
    return uncollapse(_base(collapse(x), collapse(y)));
  }

  std::size_t QuotientModel::class_product(std::size_t R, std::size_t T) const {
    if (is_finite()) {
      return (*_finite)(R, T);
    }
    return uncollapse(_base(_anchors[R], _anchors[T])).cls;
  }

  bool QuotientModel::is_maximal(std::size_t R, std::size_t T) const {
    return _maximal[R][T] != 0;
  }

  Dispatch dispatch(QuotientModel const&     q,
                    IntervalPartition const& p,
                    double                   a,
                    double                   b) {
    if (a < b) {
      std::swap(a, b);
    }
    Located const     x = locate(p, a);
    Located const     y = locate(p, b);
    std::size_t const F = p.size() - 1;
    Dispatch          d;
    d.R = x.cls;
    d.T = y.cls;
    d.r = x.local;
    d.t = y.local;

    auto thin = [&p](std::size_t c) {
      return p[c].is_singleton() || p[c].chain;
    };

    if (x.cls == F) {
      if (y.cls == F) {
        d.kind = Dispatch::Kind::filterFilter;
        d.S    = F;
      } else if (thin(y.cls)) {
        // singleton filter classes are fixed by the whole filter
        d.kind  = Dispatch::Kind::value;
        d.value = b;
      } else {
        d.kind = Dispatch::Kind::filterAction;
        d.S    = y.cls;
      }
      return d;
    }

    Located const s = q.multiply(x, y);
    d.S             = s.cls;
    if (p[s.cls].is_singleton()) {
      d.kind  = Dispatch::Kind::value;
      d.value = p[s.cls].lo;
    } else if (p[s.cls].chain) {
      d.kind  = Dispatch::Kind::value;
      d.value = to_global(p[s.cls], s.local);
    } else if (thin(x.cls) || thin(y.cls) || !q.is_maximal(x.cls, y.cls)) {
      d.kind = Dispatch::Kind::bottom;
    } else {
      d.kind = Dispatch::Kind::pair;
    }
    return d;
  }

  double clamp_local(double u) {
    constexpr double width = 1e-12;
    if (u < 0) {
      if (u < -width) {
        throw Error("local coordinate " + std::to_string(u) + " below 0");
      }
      return 0;
    }
    if (u > 1) {
      if (u > 1 + width) {
        throw Error("local coordinate " + std::to_string(u) + " above 1");
      }
      return 1;
    }
    return u;
  }

  double place(ClassShape const& s, double local) {
    double const v = to_global(s, local);
    if (s.contains(v)) {
      return v;
    }
    double const miss = v <= s.lo ? s.lo - v : v - s.hi;
    if (miss > clamp_width) {
      throw Error("value " + std::to_string(v) + " lies " + std::to_string(miss)
                  + " outside its class");
    }
    if (v <= s.lo) {
      return s.leftClosed || s.is_singleton() ? s.lo : std::nextafter(s.lo, 2.0);
    }
    return s.rightClosed || s.is_singleton() ? s.hi : std::nextafter(s.hi, -1.0);
  }

  std::string quotient_consistency(QuotientModel const&     q,
                                   IntervalPartition const& p,
                                   TnormFn const&           f) {
    std::size_t const n = p.size();
    std::size_t const F = n - 1;
    for (std::size_t R = 0; R < n; ++R) {
      for (std::size_t T = 0; T <= R; ++T) {
        for (double a : sample_class(p[R], 5)) {
          for (double b : sample_class(p[T], 5)) {
            try {
              Located const x   = locate(p, a);
              Located const y   = locate(p, b);
              std::size_t   exp = R == F ? y.cls : q.multiply(x, y).cls;
              double const  v   = f(a, b);
              if (locate(p, v).cls != exp) {
                return "quotient consistency: " + std::to_string(a) + " * " + std::to_string(b)
                       + " = " + std::to_string(v) + " leaves class " + std::to_string(exp);
              }
            } catch (Error const& err) {
              return "evaluation failed at (" + std::to_string(a) + "," + std::to_string(b)
                     + "): " + err.what();
            }
          }
        }
      }
    }
    return {};
  }

}  // namespace tnorm
