#include "tnorm/interval_partition.hpp"

#include <algorithm>  // for sort, unique
#include <sstream>    // for ostringstream

namespace tnorm {

  namespace {
    std::string num(double x) {
      std::ostringstream os;
      os.precision(17);
      os << x;
      return os.str();
    }
  }  // namespace

  std::string ValidationReport::str() const {
    std::string out;
    for (std::string const& s : issues) {
      out += out.empty() ? s : "; " + s;
    }
    return out;
  }

  bool ValidationReport::mentions(std::string const& fragment) const {
    return std::any_of(issues.begin(), issues.end(), [&](std::string const& s) {
      return s.find(fragment) != std::string::npos;
    });
  }

  bool ClassShape::contains(double x) const noexcept {
    if (is_singleton()) {
      return x == lo;
    }
    return (leftClosed ? x >= lo : x > lo) && (rightClosed ? x <= hi : x < hi);
  }

  char const* to_string(CompositionKind k) noexcept {
    switch (k) {
      case CompositionKind::lukasiewicz:
        return "lukasiewicz";
      case CompositionKind::product:
        return "product";
      case CompositionKind::reversedProduct:
        return "reversed-product";
      case CompositionKind::power:
        return "power";
      case CompositionKind::goedel:
        return "goedel";
      case CompositionKind::reversedGoedel:
        return "reversed-goedel";
      case CompositionKind::trivialSingleton:
        return "singleton";
    }
    return "?";
  }

  ValidationReport validate(IntervalPartition const& p) {
    if (p.classes.empty()) {
      throw Error("partition has no classes");
    }
    ValidationReport r;
    for (std::size_t i = 0; i < p.size(); ++i) {
      ClassShape const& c = p[i];
      std::string const at = "class " + std::to_string(i) + ": ";
      if (!(c.lo >= 0 && c.hi <= 1)) {
        r.add(at + "bounds outside [0,1]");
      }
      if (c.is_singleton() ? c.lo != c.hi : !(c.lo < c.hi)) {
        r.add(at + "empty or reversed bounds " + num(c.lo) + ".." + num(c.hi));
      }
      if (c.chain && c.is_singleton()) {
        r.add(at + "a chain class must be an interval");
      }
    }
    if (!(p[0].lo == 0 && p[0].has_min())) {
      r.add("first class does not contain 0");
    }
    if (!(p.classes.back().hi == 1 && p.classes.back().has_max())) {
      r.add("last class does not contain 1");
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      ClassShape const& a = p[i];
      ClassShape const& b = p[i + 1];
      if (a.hi < b.lo) {
        r.add("gap between " + num(a.hi) + " and " + num(b.lo));
      } else if (a.hi > b.lo) {
        r.add("overlap violation at " + num(b.lo) + ".." + num(a.hi));
      } else if (a.has_max() == b.has_min()) {
        r.add((a.has_max() ? "border claimed twice at " : "border unowned at ")
              + num(a.hi));
      }
    }
    return r;
  }

  CompositionKind archimedean_kind(ClassShape const& s) noexcept {
    if (s.is_singleton()) {
      return CompositionKind::trivialSingleton;
    }
    if (s.leftClosed) {
      return s.rightClosed ? CompositionKind::lukasiewicz
                           : CompositionKind::reversedProduct;
    }
    return s.rightClosed ? CompositionKind::product : CompositionKind::power;
  }

  CompositionKind semilattice_kind(ClassShape const& s, Orientation o) {
    if (s.is_singleton()) {
      return CompositionKind::trivialSingleton;
    }
    if (o == Orientation::preserving) {
      return CompositionKind::goedel;
    }
    if (!s.leftClosed) {
      throw Error("reversing orientation needs a class with a smallest element");
    }
    return CompositionKind::reversedGoedel;
  }

  Located locate(IntervalPartition const& p, double x) {
    if (!(x >= 0 && x <= 1)) {
      throw Error("argument " + num(x) + " outside [0,1]");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
      ClassShape const& c = p[i];
      if (c.contains(x)) {
        return {i, c.is_singleton() ? 0.0 : (x - c.lo) / (c.hi - c.lo)};
      }
    }
    throw Error("argument " + num(x) + " not covered by the partition");
  }

  double to_global(ClassShape const& s, double local) noexcept {
    if (s.is_singleton()) {
      return s.lo;
    }
    return s.lo + local * (s.hi - s.lo);
  }

  double to_global(IntervalPartition const& p, Located const& l) {
    return to_global(p[l.cls], l.local);
  }

  UnitInterval canonical_interval(CompositionKind k) noexcept {
    switch (k) {
      case CompositionKind::lukasiewicz:
        return {true, true};
      case CompositionKind::product:
      case CompositionKind::goedel:
        return {false, true};
      case CompositionKind::reversedProduct:
      case CompositionKind::reversedGoedel:
        return {true, false};
      case CompositionKind::power:
        return {false, false};
      case CompositionKind::trivialSingleton:
        return {true, true};
    }
    return {true, true};
  }

  std::vector<double> sample_class(ClassShape const& s, std::size_t interior) {
    if (s.is_singleton()) {
      return {s.lo};
    }
    std::vector<double> out;
    if (s.leftClosed) {
      out.push_back(s.lo);
    }
    for (std::size_t j = 1; j <= interior; ++j) {
      out.push_back(s.lo + (s.hi - s.lo) * static_cast<double>(j)
                               / static_cast<double>(interior + 1));
    }
    if (s.rightClosed) {
      out.push_back(s.hi);
    }
    return out;
  }

  std::vector<double> sample_unit(UnitInterval u, std::size_t interior) {
    std::vector<double> out;
    out.push_back(u.leftClosed ? 0.0 : 1e-9);
    for (std::size_t j = 1; j <= interior; ++j) {
      out.push_back(static_cast<double>(j) / static_cast<double>(interior + 1));
    }
    out.push_back(u.rightClosed ? 1.0 : 1 - 1e-9);
    return out;
  }

  std::vector<double> boundaries(IntervalPartition const& p) {
    std::vector<double> b{0.0, 1.0};
    for (ClassShape const& c : p.classes) {
      b.push_back(c.lo);
      b.push_back(c.hi);
    }
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    return b;
  }

}  // namespace tnorm
