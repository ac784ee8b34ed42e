#pragma once

// Report types shared by validators and grid checkers.

#include <cmath>    // for isnan
#include <cstddef>  // for size_t
#include <limits>   // for numeric_limits
#include <string>   // for string
#include <vector>   // for vector

namespace tnorm {

  struct ValidationReport {
    std::vector<std::string> issues;

    bool ok() const noexcept {
      return issues.empty();
    }
    void add(std::string msg) {
      issues.push_back(std::move(msg));
    }
    //! True if some issue contains the given fragment.
    bool mentions(std::string const& fragment) const;
    //! Issues joined by "; ".
    std::string str() const;
  };

  struct GridReport {
    std::string         axiom;
    double              maxDeviation = 0;
    std::vector<double> witness;
    std::size_t         samples = 0;
    double              tol     = 0;

    bool pass() const noexcept {
      return maxDeviation <= tol;
    }
    //! Keep the larger deviation and its witness.
    void record(double deviation, std::vector<double> const& at) {
      if (std::isnan(deviation)) {
        deviation = std::numeric_limits<double>::infinity();
      }
      if (deviation > maxDeviation || witness.empty()) {
        maxDeviation = deviation;
        witness      = at;
      }
    }
    void merge(GridReport const& other) {
      samples += other.samples;
      if (other.maxDeviation > maxDeviation
          || (witness.empty() && !other.witness.empty())) {
        maxDeviation = other.maxDeviation;
        witness      = other.witness;
      }
    }
  };

}  // namespace tnorm
