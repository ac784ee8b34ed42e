#pragma once

// Helpers shared by the unit tests and the acceptance binary.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "tnorm/arch_coextension.hpp"
#include "tnorm/semilattice_coextension.hpp"
#include "tnorm/spec_io.hpp"

namespace tnorm::testing {

  inline std::filesystem::path spec_path(std::string const& name) {
    return std::filesystem::path(TNORM_SPEC_DIR) / name;
  }

  inline LoadedSpec load(std::string const& name) {
    return load_spec_file(spec_path(name));
  }

  // Every family with the filter it lives under.
  struct FamilyCase {
    FamilyId   family;
    FilterKind filter;
  };

  inline std::vector<FamilyCase> const& all_families() {
    static std::vector<FamilyCase> const v = {
        {FamilyId::lukLuk, FilterKind::lukasiewiczFilter},
        {FamilyId::lukLuk, FilterKind::productFilter},
        {FamilyId::lukRprod, FilterKind::productFilter},
        {FamilyId::prodLuk, FilterKind::productFilter},
        {FamilyId::prodProd, FilterKind::productFilter},
        {FamilyId::prodRprod, FilterKind::productFilter},
        {FamilyId::prodPow, FilterKind::productFilter},
        {FamilyId::rprodRprod, FilterKind::productFilter},
        {FamilyId::powRprod, FilterKind::productFilter},
        {FamilyId::powPow, FilterKind::productFilter},
    };
    return v;
  }

  struct IntertwineResult {
    double      maxDeviation = 0;
    std::size_t triples      = 0;
    std::size_t redraws      = 0;
  };

  // Draws (f, z, r) and compares xi(rho_R(f, r)) with rho_S(f, xi(r)).
  // Finite parameter windows are used for the unbounded domains. A draw
  // whose intermediate value rounds onto an open end of a class is drawn
  // again; the count of such redraws is reported.
  inline IntertwineResult intertwining(FamilyCase c,
                                       double     aR,
                                       double     aS,
                                       std::size_t count,
                                       std::uint64_t seed) {
    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> unit(0, 1);
    bool const        luk = c.filter == FilterKind::lukasiewiczFilter;
    ParamDomain const dom = param_domain(c.family, aS / aR);
    double const      zlo = dom.lo;
    double const      zhi = std::isfinite(dom.hi) ? dom.hi : dom.lo + 10;
    CompositionKind const R = family_source(c.family);
    CompositionKind const S = family_target(c.family);
    IntertwineResult      out;
    while (out.triples < count) {
      double const f = luk ? unit(rng) : 0.2 + 0.8 * unit(rng);
      double const r = 0.01 + 0.98 * unit(rng);
      double       z = zlo + (zhi - zlo) * unit(rng);
      if (!dom.contains(z)) {
        continue;
      }
      try {
        double const lhs =
            lambda_rs_apply(c.family, aR, aS, z, rho_apply(R, c.filter, aR, f, r));
        double const rhs =
            rho_apply(S, c.filter, aS, f, lambda_rs_apply(c.family, aR, aS, z, r));
        out.maxDeviation = std::max(out.maxDeviation, std::abs(lhs - rhs));
        ++out.triples;
      } catch (Error const&) {
        ++out.redraws;
        if (out.redraws > 100 * count) {
          out.maxDeviation = INFINITY;
          return out;
        }
      }
    }
    return out;
  }

  // A random finite union of intervals and points inside [0,1].
  inline FixpointSet random_fixpoint_set(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0, 1);
    std::uniform_int_distribution<int>     parts(1, 4);
    std::bernoulli_distribution            coin(0.5);
    int const                              k = parts(rng);
    std::vector<double>                    cuts;
    for (int i = 0; i < 2 * k; ++i) {
      cuts.push_back(std::round(unit(rng) * 64) / 64);
    }
    std::sort(cuts.begin(), cuts.end());
    FixpointSet E;
    if (coin(rng)) {
      cuts.front() = 0;
    }
    for (int i = 0; i < k; ++i) {
      double const lo = cuts[2 * i];
      double const hi = cuts[2 * i + 1];
      if (lo == hi || coin(rng)) {
        E.parts.push_back(ClassShape::point(lo));
      } else {
        E.parts.push_back(ClassShape::interval(lo, hi, coin(rng), coin(rng)));
      }
    }
    // drop parts overlapping an earlier one
    std::vector<ClassShape> clean;
    for (ClassShape const& p : E.parts) {
      if (clean.empty() || p.lo > clean.back().hi) {
        clean.push_back(p);
      }
    }
    E.parts = clean;
    return E;
  }

  // A spec over some small tomonoid in which the diagonal pair (R,R) is
  // maximal, R has kind `from` and R * R lies in a class of kind `to`.
  // Other classes take whatever shapes make the partition valid. No finite
  // partition fits a Lukasiewicz filter, so that filter yields nothing here.
  struct RealizedPair {
    ArchCoextensionSpec spec;
    std::size_t         R = 0;
    std::size_t         S = 0;
  };

  inline std::optional<RealizedPair>
  realize_pair(CompositionKind from, CompositionKind to, FilterKind filter) {
    using CK = CompositionKind;
    // shape options: 0 singleton, 1..4 interval with flags (lc, rc)
    auto flags = [](CK k) -> int {
      switch (k) {
        case CK::lukasiewicz:
          return 4;  // [ ]
        case CK::product:
          return 2;  // ( ]
        case CK::reversedProduct:
          return 3;  // [ )
        default:
          return 1;  // ( )
      }
    };
    auto lc  = [](int o) { return o == 0 || o == 3 || o == 4; };
    auto rc  = [](int o) { return o == 0 || o == 2 || o == 4; };
    bool const luk = filter == FilterKind::lukasiewiczFilter;
    for (std::size_t n = 3; n <= 6; ++n) {
      for (FiniteTomonoid const& t : enumerate_tomonoids(n)) {
        for (std::size_t R = 1; R + 1 < n; ++R) {
          std::size_t const S = t(R, R);
          if (S == R || !is_maximal_pair(t, R, R)) {
            continue;
          }
          std::vector<int> opt(n, 0);
          opt[n - 1] = luk ? 4 : 2;
          opt[R]     = flags(from);
          opt[S]     = flags(to);
          std::vector<std::size_t> free;
          for (std::size_t i = 0; i + 1 < n; ++i) {
            if (i != R && i != S) {
              free.push_back(i);
            }
          }
          std::size_t combos = 1;
          for (std::size_t i = 0; i < free.size(); ++i) {
            combos *= 5;
          }
          for (std::size_t c = 0; c < combos; ++c) {
            std::size_t rest = c;
            for (std::size_t i : free) {
              opt[i] = static_cast<int>(rest % 5);
              rest /= 5;
              if (luk && opt[i] != 0) {
                opt[i] = 4;
              }
            }
            bool ok = lc(opt[0]);
            for (std::size_t i = 1; i < n && ok; ++i) {
              ok = rc(opt[i - 1]) != lc(opt[i]);
            }
            if (!ok) {
              continue;
            }
            double width = 0;
            for (int o : opt) {
              width += o == 0 ? 0 : 1;
            }
            IntervalPartition p;
            double            x = 0;
            for (std::size_t i = 0; i < n; ++i) {
              if (opt[i] == 0) {
                p.classes.push_back(ClassShape::point(x));
              } else {
                double const y = i + 1 == n ? 1.0 : x + 1 / width;
                p.classes.push_back(ClassShape::interval(x, y, lc(opt[i]), rc(opt[i])));
                x = y;
              }
            }
            ArchCoextensionSpec spec;
            spec.quotient   = QuotientModel(t);
            spec.partition  = p;
            spec.filterKind = filter;
            spec.alpha.assign(n, std::nullopt);
            for (std::size_t i = 0; i + 1 < n; ++i) {
              if (opt[i] != 0) {
                spec.alpha[i] = 1.0;
              }
            }
            return RealizedPair{spec, R, S};
          }
        }
      }
    }
    return std::nullopt;
  }

  // A parameter strictly inside the family's domain, for alphaS = alphaR.
  inline double interior_parameter(FamilyId family) {
    ParamDomain const d = param_domain(family, 1);
    if (!std::isfinite(d.hi)) {
      return d.lo + 1;
    }
    return (d.lo + d.hi) / 2;
  }

}  // namespace tnorm::testing
