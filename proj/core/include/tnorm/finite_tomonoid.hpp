#pragma once

// Finite negative commutative tomonoids stored as Cayley tables.
// Elements are indices 0..n-1 in chain order; n-1 is the identity (top).

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

namespace tnorm {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  using Table = std::vector<std::vector<std::size_t>>;

  struct AxiomViolation {
    std::string              axiom;
    std::vector<std::size_t> witness;
  };

  struct AxiomReport {
    // Non-empty when the table is malformed; no axioms are checked then.
    std::string                 structural;
    std::vector<AxiomViolation> violations;

    bool ok() const noexcept {
      return structural.empty() && violations.empty();
    }
    bool has(std::string const& axiom) const;
  };

  //! Brute-force check of associativity, commutativity, identity,
  //! negativity and monotonicity. One witness per violated axiom.
  AxiomReport check_axioms(Table const& table);

  class FiniteTomonoid {
   public:
    //! Throws Error unless check_axioms(table) is clean.
    explicit FiniteTomonoid(Table table);

    static FiniteTomonoid lukasiewicz(std::size_t n);
    static FiniteTomonoid minimum(std::size_t n);

    std::size_t size() const noexcept {
      return _table.size();
    }
    std::size_t top() const noexcept {
      return _table.size() - 1;
    }
    std::size_t operator()(std::size_t a, std::size_t b) const {
      return _table[a][b];
    }
    Table const& table() const noexcept {
      return _table;
    }

    bool operator==(FiniteTomonoid const& that) const = default;

   private:
    Table _table;
  };

  // The filter {low, ..., n-1}. Finite chains only have filters of this
  // closed form, see filters().
  struct Filter {
    std::size_t low;
    std::size_t n;

    bool contains(std::size_t a) const noexcept {
      return a >= low && a < n;
    }
    bool operator==(Filter const&) const = default;
  };

  struct Congruence {
    // Inclusive index ranges, in chain order.
    std::vector<std::pair<std::size_t, std::size_t>> classes;

    std::size_t class_of(std::size_t a) const;
  };

  std::vector<std::size_t> idempotents(FiniteTomonoid const& t);
  std::vector<Filter>      filters(FiniteTomonoid const& t);

  Congruence     congruence_by_filter(FiniteTomonoid const& t, Filter const& f);
  FiniteTomonoid quotient(FiniteTomonoid const& t, Filter const& f);

  //! max { c : a * c <= b }
  std::size_t residuum(FiniteTomonoid const& t, std::size_t a, std::size_t b);

  //! (t -> s, (t -> s) -> s) with s = r * t.
  std::pair<std::size_t, std::size_t>
  maximal_pair(FiniteTomonoid const& t, std::size_t r, std::size_t u);

  bool is_maximal_pair(FiniteTomonoid const& t, std::size_t r, std::size_t u);

  //! Row a is the translation x -> a * x.
  std::vector<std::vector<std::size_t>> cayley(FiniteTomonoid const& t);

  bool is_archimedean(FiniteTomonoid const& t);
  bool is_semilattice(FiniteTomonoid const& t);

  constexpr std::size_t max_enumeration_size = 6;

  //! All tomonoids on the n-chain in lexicographic row-major order.
  //! Throws Error when n is 0 or exceeds max_enumeration_size.
  std::vector<FiniteTomonoid> enumerate_tomonoids(std::size_t n);

}  // namespace tnorm
