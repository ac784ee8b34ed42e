#pragma once

// Line-oriented text format for tomonoid tables and coextension specs.
//
//   # comment
//   tomonoid 3            n rows of n indices follow
//   base other.spec       quotient given by a t-norm spec instead
//   partition             rows until the next keyword:
//     lo hi L|O R|O [@anchor] [chain]
//     point x [@anchor]
//   filter lukasiewicz|product|semilattice
//   rho <class> <alpha>
//   numap <class> preserving|reversing
//   pair <R> <T> case=<family> [m=<x>] [zmap=affine:c0,c1|step:t,lo,hi] [sprime=z,...]
//
// Numbers may be written as decimals or as p/q.

#include <cstddef>     // for size_t
#include <filesystem>  // for path
#include <memory>      // for shared_ptr
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "tnorm/arch_coextension.hpp"         // for ArchCoextension
#include "tnorm/finite_tomonoid.hpp"          // for FiniteTomonoid, Table
#include "tnorm/semilattice_coextension.hpp"  // for SemiCoextension

namespace tnorm {

  class ParseError : public Error {
   public:
    //! Line 0 means the error has no position. A non-empty file is put in
    //! front as file:line:col.
    ParseError(std::size_t        line,
               std::size_t        column,
               std::string const& msg,
               std::string const& file = {});

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }
    //! The message without file or position.
    std::string const& detail() const noexcept {
      return _detail;
    }

   private:
    std::size_t _line;
    std::size_t _column;
    std::string _detail;
  };

  enum class FilterSection { lukasiewicz, product, semilattice };

  struct PartitionRow {
    ClassShape            shape;
    std::optional<double> anchor;

    bool operator==(PartitionRow const&) const = default;
  };

  //! Syntactic content of a spec file; semantic checks happen on load.
  struct SpecDocument {
    enum class Kind { tomonoid, arch, semi };

    Kind                                         kind = Kind::tomonoid;
    std::optional<Table>                         tomonoid;
    std::optional<std::string>                   base;
    std::vector<PartitionRow>                    partition;
    std::optional<FilterSection>                 filter;
    std::vector<std::pair<std::size_t, double>>      rho;
    std::vector<std::pair<std::size_t, Orientation>> numap;
    std::vector<PairFamily>                      pairs;

    bool operator==(SpecDocument const&) const = default;
  };

  //! Throws ParseError with a 1-based position.
  SpecDocument parse_spec(std::string const& text);

  //! Canonical text; parse_spec(print_spec(d)) == d.
  std::string print_spec(SpecDocument const& doc);

  //! Shortest decimal that reads back as the same double.
  std::string format_double(double x);

  //! Throws ParseError when the file cannot be read (line 0).
  SpecDocument read_spec_file(std::filesystem::path const& path);

  //! Quotient table of a document with a tomonoid section.
  FiniteTomonoid tomonoid_of(SpecDocument const& doc);

  //! `base` is required iff the document has a base line.
  ArchCoextensionSpec to_arch_spec(SpecDocument const& doc, TnormFn base = {});
  SemiCoextensionSpec to_semi_spec(SpecDocument const& doc, TnormFn base = {});

  //! A spec file turned into an object ready for use.
  struct LoadedSpec {
    SpecDocument                     doc;
    std::optional<FiniteTomonoid>    tomonoid;
    std::shared_ptr<ArchCoextension> arch;
    std::shared_ptr<SemiCoextension> semi;

    bool is_coextension() const noexcept {
      return arch || semi;
    }
    //! Throws Error for a plain tomonoid document.
    TnormFn                  fn() const;
    IntervalPartition const& partition() const;
    QuotientModel const&     quotient() const;
  };

  //! Base paths are resolved against `dir`. Throws Error (or ParseError)
  //! on invalid content.
  LoadedSpec load_spec(SpecDocument doc, std::filesystem::path const& dir);
  LoadedSpec load_spec_file(std::filesystem::path const& path);

}  // namespace tnorm
