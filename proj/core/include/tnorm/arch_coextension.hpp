#pragma once

// Archimedean real coextensions: a Lukasiewicz or product filter acting
// on each class through a one-parameter homomorphism, and the closed-form
// families describing how one class is mapped into another.

#include <cstddef>   // for size_t
#include <optional>  // for optional
#include <vector>    // for vector

#include "tnorm/interval_partition.hpp"  // for IntervalPartition, CompositionKind
#include "tnorm/quotient_model.hpp"      // for QuotientModel, PairFamily
#include "tnorm/report.hpp"              // for ValidationReport, GridReport

namespace tnorm {

  enum class FilterKind { lukasiewiczFilter, productFilter };

  char const* to_string(FilterKind k) noexcept;

  //! Lukasiewicz: (f + g - 1) v 0 on [0,1]; product: f g on (0,1].
  double filter_op(FilterKind kind, double f, double g);

  //! Action of the filter element f on the class coordinate r.
  //! Throws Error on an illegal (class, filter) combination, on alpha <= 0,
  //! on alpha < 1 under a Lukasiewicz filter, or on out-of-range input.
  double rho_apply(CompositionKind cls, FilterKind filter, double alpha, double f, double r);

  enum class PairContext { maximal, nonMaximal, singletonR, singletonS };

  struct PairCase {
    enum class Outcome {
      impossible,
      trivial,
      family,
      // the class kinds cannot occur with this filter at all
      kindMismatch
    };
    Outcome  outcome = Outcome::trivial;
    FamilyId family  = FamilyId::trivial;

    bool operator==(PairCase const&) const = default;
  };

  PairCase pair_case(CompositionKind R, CompositionKind S, FilterKind filter, PairContext ctx);

  //! Parameter set of a family, before any cap is applied.
  struct ParamDomain {
    double lo;
    bool   loClosed;
    double hi;
    bool   hiClosed;

    bool contains(double z) const noexcept {
      return (loClosed ? z >= lo : z > lo) && (hiClosed ? z <= hi : z < hi);
    }
    bool below(double z) const noexcept {
      return loClosed ? z < lo : z <= lo;
    }
  };

  //! k = alphaS / alphaR.
  ParamDomain param_domain(FamilyId family, double k);

  //! Whether a parameter below the domain may stand for the constant map
  //! onto the bottom of S, i.e. whether that constant map can belong to
  //! the family's set of maps.
  bool bottom_allowed(FamilyId family) noexcept;

  //! Closed-form map r -> S coordinate for parameter z.
  //! Throws Error if z is outside param_domain or r outside R's interval.
  double lambda_rs_apply(FamilyId family, double alphaR, double alphaS, double z, double r);

  CompositionKind family_source(FamilyId family) noexcept;
  CompositionKind family_target(FamilyId family) noexcept;

  struct ArchCoextensionSpec {
    QuotientModel                      quotient;
    IntervalPartition                  partition;
    FilterKind                         filterKind = FilterKind::productFilter;
    std::vector<std::optional<double>> alpha;  // per class
    std::vector<PairFamily>            pairs;
  };

  ValidationReport validate_spec(ArchCoextensionSpec const& spec);

  //! A validated spec, ready for evaluation.
  class ArchCoextension {
   public:
    //! Throws Error listing every issue if validate_spec fails.
    explicit ArchCoextension(ArchCoextensionSpec spec);

    double operator()(double a, double b) const {
      return evaluate(a, b);
    }
    double evaluate(double a, double b) const;

    ArchCoextensionSpec const& spec() const noexcept {
      return _spec;
    }
    CompositionKind kind(std::size_t cls) const noexcept {
      return _kinds[cls];
    }
    //! Family used for the pair (R,T), R >= T; trivial if none.
    FamilyId family(std::size_t R, std::size_t T) const;

   private:
    struct Unchecked {};
    ArchCoextension(ArchCoextensionSpec spec, Unchecked);
    void compile();

    friend ValidationReport validate_spec(ArchCoextensionSpec const&);

    ArchCoextensionSpec           _spec;
    std::vector<CompositionKind>  _kinds;
    std::vector<std::vector<int>> _pairIndex;
  };

  //! Samples f in the filter, r and t in every class pair and compares
  //! (r * f) * t with (r * t) * f. sampleCount points per class.
  GridReport verify_commuting(ArchCoextension const& c, std::size_t sampleCount);

}  // namespace tnorm
