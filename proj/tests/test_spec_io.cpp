#include <gtest/gtest.h>

#include <cstddef>
#include <fstream>
#include <random>
#include <string>

#include "support.hpp"
#include "tnorm/spec_io.hpp"

using namespace tnorm;
using tnorm::testing::spec_path;

namespace {
  // Returns the error position, or (0,0) if parsing succeeded.
  std::pair<std::size_t, std::size_t> error_at(std::string const& text) {
    try {
      parse_spec(text);
    } catch (ParseError const& e) {
      return {e.line(), e.column()};
    }
    return {0, 0};
  }
}  // namespace

TEST(ParseSpec, TwoChain) {
  SpecDocument const d = parse_spec("tomonoid 2\n0 0\n0 1\n");
  ASSERT_TRUE(d.tomonoid);
  EXPECT_EQ(tomonoid_of(d), FiniteTomonoid::minimum(2));
  EXPECT_EQ(d.kind, SpecDocument::Kind::tomonoid);
}

TEST(ParseSpec, UnknownCaseNamesToken) {
  try {
    parse_spec("pair 1 2 case=unknown\n");
    FAIL() << "expected a parse error";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 10u);
    EXPECT_NE(std::string(e.what()).find("unknown"), std::string::npos);
  }
}

TEST(ParseSpec, ErrorsCarryPositions) {
  EXPECT_EQ(error_at("# c\nbogus 1\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(error_at("tomonoid 2\n0 x\n0 1\n").first, 2u);
  EXPECT_EQ(error_at("tomonoid 2\n0 0\n").first, 1u);  // reported at the header
  EXPECT_EQ(error_at("partition\n0 1 L Q\n"), (std::pair<std::size_t, std::size_t>{2, 7}));
  EXPECT_EQ(error_at("rho 1\n").first, 1u);
  EXPECT_EQ(error_at("numap 0 sideways\n").first, 1u);
  EXPECT_EQ(error_at("pair 1 1 m=0\n").first, 1u);
  EXPECT_EQ(error_at("pair 1 1 case=prod-prod zmap=cubic:1\n").first, 1u);
  EXPECT_EQ(error_at("filter fuzzy\n").first, 1u);
  EXPECT_EQ(error_at("filter product\nfilter product\n").first, 2u);
  EXPECT_EQ(error_at("partition\n1/0 1 L R\n").first, 2u);
}

TEST(ParseSpec, Rationals) {
  SpecDocument const d = parse_spec("base q.spec\npartition\n0 1/3 L O\n1/3 1 L R\nfilter product\n");
  ASSERT_EQ(d.partition.size(), 2u);
  EXPECT_EQ(d.partition[0].shape.hi, 1.0 / 3.0);
  EXPECT_FALSE(d.partition[0].shape.rightClosed);
}

TEST(ParseSpec, ShippedSpecsRoundTrip) {
  for (int k = 1; k <= 4; ++k) {
    std::string const  name = "odot" + std::to_string(k) + ".spec";
    SpecDocument const d    = read_spec_file(spec_path(name));
    std::string const  text = print_spec(d);
    EXPECT_EQ(parse_spec(text), d) << name << "\n" << text;
    EXPECT_EQ(print_spec(parse_spec(text)), text);
    LoadedSpec const s = load_spec_file(spec_path(name));
    EXPECT_TRUE(s.is_coextension()) << name;
  }
}

TEST(ParseSpec, RandomDocumentsRoundTrip) {
  std::mt19937_64                        rng(41);
  std::uniform_real_distribution<double> unit(0, 1);
  std::uniform_int_distribution<int>     small(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    SpecDocument d;
    d.kind   = SpecDocument::Kind::arch;
    d.base   = "x" + std::to_string(trial) + ".spec";
    d.filter = trial % 2 ? FilterSection::product : FilterSection::lukasiewicz;
    int const rows = 1 + small(rng);
    for (int i = 0; i < rows; ++i) {
      PartitionRow row;
      row.shape = i % 3 == 1 ? ClassShape::point(unit(rng))
                             : ClassShape::interval(unit(rng), unit(rng), unit(rng) < 0.5,
                                                    unit(rng) < 0.5);
      if (unit(rng) < 0.5) {
        row.anchor = unit(rng);
      }
      if (!row.shape.is_singleton() && unit(rng) < 0.3) {
        row.shape.chain = true;
      }
      d.partition.push_back(row);
    }
    d.rho.emplace_back(small(rng), 1 + unit(rng));
    PairFamily pf;
    pf.R      = small(rng);
    pf.T      = small(rng);
    pf.family = FamilyId::prodProd;
    if (unit(rng) < 0.5) {
      pf.m = unit(rng);
    }
    pf.zmap = unit(rng) < 0.5 ? ZMap::affine(-unit(rng), unit(rng))
                              : ZMap::step(unit(rng), unit(rng), unit(rng));
    if (unit(rng) < 0.3) {
      pf.sprime = {0, unit(rng)};
    }
    d.pairs.push_back(pf);
    SpecDocument const back = parse_spec(print_spec(d));
    EXPECT_EQ(back, d) << print_spec(d);
  }
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1), "1");
  std::mt19937_64                        rng(43);
  std::uniform_real_distribution<double> unit(0, 1);
  for (int i = 0; i < 1000; ++i) {
    double const x = unit(rng);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(LoadSpec, SemanticErrors) {
  EXPECT_THROW(load_spec_file(spec_path("missing.spec")), ParseError);
  SpecDocument d = read_spec_file(spec_path("odot2.spec"));
  d.rho.clear();
  EXPECT_THROW(load_spec(d, TNORM_SPEC_DIR), Error);
  d = read_spec_file(spec_path("odot3.spec"));
  d.tomonoid->at(1).at(1) = 1;
  EXPECT_THROW(load_spec(d, TNORM_SPEC_DIR), Error);
}
