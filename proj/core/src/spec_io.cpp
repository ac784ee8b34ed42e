#include "tnorm/spec_io.hpp"

#include <cctype>    // for isspace
#include <charconv>  // for from_chars, to_chars
#include <cmath>     // for isfinite
#include <fstream>   // for ifstream
#include <sstream>   // for ostringstream
#include <set>       // for set

namespace tnorm {

  namespace {
    std::string located(std::size_t        line,
                        std::size_t        column,
                        std::string const& msg,
                        std::string const& file) {
      std::string const pos = std::to_string(line) + ":" + std::to_string(column);
      if (!file.empty()) {
        return file + (line ? ":" + pos : "") + ": " + msg;
      }
      if (line) {
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg;
      }
      return msg;
    }
  }  // namespace

  ParseError::ParseError(std::size_t        line,
                         std::size_t        column,
                         std::string const& msg,
                         std::string const& file)
      : Error(located(line, column, msg, file)), _line(line), _column(column), _detail(msg) {}

  namespace {
    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    struct Line {
      std::vector<Token> tokens;
      std::size_t        number;
    };

    std::vector<Line> tokenize(std::string const& text) {
      std::vector<Line>  lines;
      std::istringstream in(text);
      std::string        raw;
      std::size_t        number = 0;
      while (std::getline(in, raw)) {
        ++number;
        if (std::size_t const hash = raw.find('#'); hash != std::string::npos) {
          raw.erase(hash);
        }
        Line line{{}, number};
        std::size_t i = 0;
        while (i < raw.size()) {
          while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
          }
          std::size_t const start = i;
          while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
          }
          if (i > start) {
            line.tokens.push_back({raw.substr(start, i - start), start + 1});
          }
        }
        if (!line.tokens.empty()) {
          lines.push_back(std::move(line));
        }
      }
      return lines;
    }

    bool parse_plain(std::string_view s, double& out) {
      if (s.empty()) {
        return false;
      }
      if (s.front() == '+') {
        s.remove_prefix(1);
      }
      auto const [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
      return ec == std::errc() && ptr == s.data() + s.size();
    }

    // decimal or p/q
    bool parse_number(std::string_view s, double& out) {
      std::size_t const slash = s.find('/');
      if (slash == std::string_view::npos) {
        return parse_plain(s, out);
      }
      double p = 0, q = 0;
      if (!parse_plain(s.substr(0, slash), p) || !parse_plain(s.substr(slash + 1), q) || q == 0) {
        return false;
      }
      out = p / q;
      return true;
    }

    [[noreturn]] void fail(Line const& l, Token const& t, std::string const& msg) {
      throw ParseError(l.number, t.column, msg);
    }

    [[noreturn]] void fail_at(Line const& l, std::size_t column, std::string const& msg) {
      throw ParseError(l.number, column, msg);
    }

    double number(Line const& l, Token const& t, std::string_view s) {
      double x = 0;
      if (!parse_number(s, x)) {
        fail(l, t, "expected a number, got '" + std::string(s) + "'");
      }
      return x;
    }

    double number(Line const& l, Token const& t) {
      return number(l, t, t.text);
    }

    std::size_t index(Line const& l, Token const& t) {
      std::size_t v   = 0;
      char const* end = t.text.data() + t.text.size();
      auto const [ptr, ec] = std::from_chars(t.text.data(), end, v);
      if (ec != std::errc() || ptr != end) {
        fail(l, t, "expected a non-negative integer, got '" + t.text + "'");
      }
      return v;
    }

    std::vector<double> number_list(Line const& l, Token const& t, std::string_view s) {
      std::vector<double> out;
      while (true) {
        std::size_t const comma = s.find(',');
        out.push_back(number(l, t, s.substr(0, comma)));
        if (comma == std::string_view::npos) {
          break;
        }
        s.remove_prefix(comma + 1);
      }
      return out;
    }

    void arity(Line const& l, std::size_t lo, std::size_t hi) {
      std::size_t const n = l.tokens.size();
      if (n < lo || n > hi) {
        Token const& last = l.tokens.back();
        fail_at(l,
                n < lo ? last.column + last.text.size() : l.tokens[hi].column,
                "'" + l.tokens[0].text + "' expects " + std::to_string(lo - 1)
                    + (lo == hi ? "" : " to " + std::to_string(hi - 1)) + " arguments, got "
                    + std::to_string(n - 1));
      }
    }

    std::set<std::string> const keywords{"tomonoid", "base",  "partition", "filter",
                                         "rho",      "numap", "pair"};

    PartitionRow partition_row(Line const& l) {
      std::vector<Token> const& t = l.tokens;
      PartitionRow              row;
      std::size_t               i = 0;
      if (t[0].text == "point") {
        if (t.size() < 2) {
          fail_at(l, t[0].column + 5, "'point' expects a coordinate");
        }
        row.shape = ClassShape::point(number(l, t[1]));
        i         = 2;
      } else {
        if (t.size() < 4) {
          fail_at(l, t.back().column + t.back().text.size(),
                  "partition rows read 'lo hi L|O R|O'");
        }
        double const lo = number(l, t[0]);
        double const hi = number(l, t[1]);
        if (t[2].text != "L" && t[2].text != "O") {
          fail(l, t[2], "left flag must be L or O, got '" + t[2].text + "'");
        }
        if (t[3].text != "R" && t[3].text != "O") {
          fail(l, t[3], "right flag must be R or O, got '" + t[3].text + "'");
        }
        row.shape = ClassShape::interval(lo, hi, t[2].text == "L", t[3].text == "R");
        i         = 4;
      }
      for (; i < t.size(); ++i) {
        if (t[i].text.starts_with('@') && !row.anchor) {
          row.anchor = number(l, t[i], std::string_view(t[i].text).substr(1));
        } else if (t[i].text == "chain" && !row.shape.chain && !row.shape.is_singleton()) {
          row.shape.chain = true;
        } else {
          fail(l, t[i], "unexpected token '" + t[i].text + "' in partition row");
        }
      }
      return row;
    }

    PairFamily pair_line(Line const& l) {
      std::vector<Token> const& t = l.tokens;
      if (t.size() < 4) {
        arity(l, 4, 7);
      }
      PairFamily pf;
      pf.R = index(l, t[1]);
      pf.T = index(l, t[2]);
      std::set<std::string> seen;
      bool                  hasCase = false;
      for (std::size_t i = 3; i < t.size(); ++i) {
        std::string const& s  = t[i].text;
        std::size_t const  eq = s.find('=');
        if (eq == std::string::npos) {
          fail(l, t[i], "expected key=value, got '" + s + "'");
        }
        std::string const key = s.substr(0, eq);
        std::string_view  val = std::string_view(s).substr(eq + 1);
        if (!seen.insert(key).second) {
          fail(l, t[i], "duplicate key '" + key + "'");
        }
        if (key == "case") {
          std::optional<FamilyId> f = family_from_string(std::string(val));
          if (!f) {
            fail(l, t[i], "unknown case '" + std::string(val) + "'");
          }
          pf.family = *f;
          hasCase   = true;
        } else if (key == "m") {
          pf.m = number(l, t[i], val);
        } else if (key == "zmap") {
          if (val.starts_with("affine:")) {
            std::vector<double> c = number_list(l, t[i], val.substr(7));
            if (c.size() != 2) {
              fail(l, t[i], "affine zmap takes c0,c1");
            }
            pf.zmap = ZMap::affine(c[0], c[1]);
          } else if (val.starts_with("step:")) {
            std::vector<double> c = number_list(l, t[i], val.substr(5));
            if (c.size() != 3) {
              fail(l, t[i], "step zmap takes threshold,low,high");
            }
            pf.zmap = ZMap::step(c[0], c[1], c[2]);
          } else {
            fail(l, t[i], "unknown zmap '" + std::string(val) + "'");
          }
        } else if (key == "sprime") {
          pf.sprime = number_list(l, t[i], val);
        } else {
          fail(l, t[i], "unknown key '" + key + "'");
        }
      }
      if (!hasCase) {
        fail_at(l, t[0].column, "pair line without case=");
      }
      return pf;
    }
  }  // namespace

  SpecDocument parse_spec(std::string const& text) {
    std::vector<Line> const lines = tokenize(text);
    SpecDocument            doc;
    std::set<std::string>   once;
    bool                    inPartition = false;

    for (std::size_t li = 0; li < lines.size(); ++li) {
      Line const&        l  = lines[li];
      Token const&       t0 = l.tokens[0];
      std::string const& kw = t0.text;
      if (!keywords.contains(kw)) {
        if (inPartition) {
          doc.partition.push_back(partition_row(l));
          continue;
        }
        fail(l, t0, "unknown section '" + kw + "'");
      }
      inPartition = false;
      if ((kw == "tomonoid" || kw == "base" || kw == "partition" || kw == "filter")
          && !once.insert(kw).second) {
        fail(l, t0, "duplicate '" + kw + "' section");
      }

      if (kw == "tomonoid") {
        arity(l, 2, 2);
        std::size_t const n = index(l, l.tokens[1]);
        if (n == 0) {
          fail(l, l.tokens[1], "a tomonoid needs at least one element");
        }
        Table table;
        for (std::size_t r = 0; r < n; ++r) {
          if (li + 1 >= lines.size()) {
            fail_at(l, t0.column, "expected " + std::to_string(n) + " table rows");
          }
          Line const& row = lines[++li];
          if (row.tokens.size() != n) {
            fail_at(row, row.tokens.back().column,
                    "expected " + std::to_string(n) + " entries, got "
                        + std::to_string(row.tokens.size()));
          }
          std::vector<std::size_t> values;
          for (Token const& tok : row.tokens) {
            values.push_back(index(row, tok));
          }
          table.push_back(std::move(values));
        }
        doc.tomonoid = std::move(table);
      } else if (kw == "base") {
        arity(l, 2, 2);
        doc.base = l.tokens[1].text;
      } else if (kw == "partition") {
        arity(l, 1, 1);
        inPartition = true;
      } else if (kw == "filter") {
        arity(l, 2, 2);
        std::string const& v = l.tokens[1].text;
        if (v == "lukasiewicz") {
          doc.filter = FilterSection::lukasiewicz;
        } else if (v == "product") {
          doc.filter = FilterSection::product;
        } else if (v == "semilattice") {
          doc.filter = FilterSection::semilattice;
        } else {
          fail(l, l.tokens[1], "unknown filter '" + v + "'");
        }
      } else if (kw == "rho") {
        arity(l, 3, 3);
        doc.rho.emplace_back(index(l, l.tokens[1]), number(l, l.tokens[2]));
      } else if (kw == "numap") {
        arity(l, 3, 3);
        std::string const& v = l.tokens[2].text;
        if (v != "preserving" && v != "reversing") {
          fail(l, l.tokens[2], "orientation must be preserving or reversing, got '" + v + "'");
        }
        doc.numap.emplace_back(index(l, l.tokens[1]),
                               v == "preserving" ? Orientation::preserving
                                                 : Orientation::reversing);
      } else {
        doc.pairs.push_back(pair_line(l));
      }
    }

    if (!doc.filter) {
      doc.kind = SpecDocument::Kind::tomonoid;
      if (!doc.tomonoid) {
        throw ParseError(lines.empty() ? 1 : lines.back().number, 1,
                         "missing 'tomonoid' or 'filter' section");
      }
    } else {
      doc.kind = *doc.filter == FilterSection::semilattice ? SpecDocument::Kind::semi
                                                           : SpecDocument::Kind::arch;
      if (doc.tomonoid.has_value() == doc.base.has_value()) {
        throw ParseError(lines.back().number, 1,
                         "a coextension needs exactly one of 'tomonoid' and 'base'");
      }
      if (doc.partition.empty()) {
        throw ParseError(lines.back().number, 1, "missing 'partition' rows");
      }
    }
    return doc;
  }

  std::string format_double(double x) {
    char buf[64];
    auto const [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::to_string(x);
  }

  std::string print_spec(SpecDocument const& doc) {
    std::ostringstream os;
    if (doc.tomonoid) {
      os << "tomonoid " << doc.tomonoid->size() << '\n';
      for (std::vector<std::size_t> const& row : *doc.tomonoid) {
        for (std::size_t j = 0; j < row.size(); ++j) {
          os << (j ? " " : "") << row[j];
        }
        os << '\n';
      }
    }
    if (doc.base) {
      os << "base " << *doc.base << '\n';
    }
    if (!doc.partition.empty()) {
      os << "partition\n";
      for (PartitionRow const& r : doc.partition) {
        ClassShape const& s = r.shape;
        if (s.is_singleton()) {
          os << "  point " << format_double(s.lo);
        } else {
          os << "  " << format_double(s.lo) << ' ' << format_double(s.hi) << ' '
             << (s.leftClosed ? 'L' : 'O') << ' ' << (s.rightClosed ? 'R' : 'O');
        }
        if (r.anchor) {
          os << " @" << format_double(*r.anchor);
        }
        if (s.chain) {
          os << " chain";
        }
        os << '\n';
      }
    }
    if (doc.filter) {
      char const* names[] = {"lukasiewicz", "product", "semilattice"};
      os << "filter " << names[static_cast<int>(*doc.filter)] << '\n';
    }
    for (auto const& [cls, alpha] : doc.rho) {
      os << "rho " << cls << ' ' << format_double(alpha) << '\n';
    }
    for (auto const& [cls, o] : doc.numap) {
      os << "numap " << cls << ' '
         << (o == Orientation::preserving ? "preserving" : "reversing") << '\n';
    }
    for (PairFamily const& p : doc.pairs) {
      os << "pair " << p.R << ' ' << p.T << " case=" << to_string(p.family);
      if (p.m) {
        os << " m=" << format_double(*p.m);
      }
      ZMap const& z = p.zmap;
      if (z.kind == ZMap::Kind::affine) {
        os << " zmap=affine:" << format_double(z.c0) << ',' << format_double(z.c1);
      } else {
        os << " zmap=step:" << format_double(z.c0) << ',' << format_double(z.a) << ','
           << format_double(z.b);
      }
      if (!p.sprime.empty()) {
        os << " sprime=";
        for (std::size_t i = 0; i < p.sprime.size(); ++i) {
          os << (i ? "," : "") << format_double(p.sprime[i]);
        }
      }
      os << '\n';
    }
    return os.str();
  }

  SpecDocument read_spec_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError(0, 0, "cannot read file", path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
      return parse_spec(ss.str());
    } catch (ParseError const& e) {
      throw ParseError(e.line(), e.column(), e.detail(), path.string());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Documents to module types
  ////////////////////////////////////////////////////////////////////////

  namespace {
    IntervalPartition partition_of(SpecDocument const& doc) {
      IntervalPartition p;
      for (PartitionRow const& r : doc.partition) {
        p.classes.push_back(r.shape);
      }
      return p;
    }

    QuotientModel quotient_of(SpecDocument const& doc, IntervalPartition const& p, TnormFn base) {
      if (doc.tomonoid) {
        return QuotientModel(FiniteTomonoid(*doc.tomonoid));
      }
      if (!base) {
        throw Error("a base t-norm is required for '" + doc.base.value_or("?") + "'");
      }
      std::vector<double> anchors;
      for (std::size_t i = 0; i < doc.partition.size(); ++i) {
        PartitionRow const& r = doc.partition[i];
        if (!r.anchor && !r.shape.chain) {
          throw Error("class " + std::to_string(i) + " needs an @anchor in the base t-norm");
        }
        anchors.push_back(r.anchor.value_or(0));
      }
      return QuotientModel(std::move(base), std::move(anchors), p);
    }

    void check_index(std::size_t cls, std::size_t n, char const* what) {
      if (cls >= n) {
        throw Error(std::string(what) + " line for class " + std::to_string(cls)
                    + " but there are " + std::to_string(n) + " classes");
      }
    }
  }  // namespace

  FiniteTomonoid tomonoid_of(SpecDocument const& doc) {
    if (!doc.tomonoid) {
      throw Error("the document has no tomonoid section");
    }
    return FiniteTomonoid(*doc.tomonoid);
  }

  ArchCoextensionSpec to_arch_spec(SpecDocument const& doc, TnormFn base) {
    if (doc.kind != SpecDocument::Kind::arch) {
      throw Error("not an Archimedean coextension spec");
    }
    ArchCoextensionSpec spec;
    spec.partition  = partition_of(doc);
    spec.quotient   = quotient_of(doc, spec.partition, std::move(base));
    spec.filterKind = *doc.filter == FilterSection::lukasiewicz ? FilterKind::lukasiewiczFilter
                                                                : FilterKind::productFilter;
    std::size_t const n = spec.partition.size();
    spec.alpha.assign(n, std::nullopt);
    for (auto const& [cls, alpha] : doc.rho) {
      check_index(cls, n, "rho");
      if (spec.alpha[cls]) {
        throw Error("duplicate rho line for class " + std::to_string(cls));
      }
      spec.alpha[cls] = alpha;
    }
    if (!doc.numap.empty()) {
      throw Error("numap lines only apply to a semilattice filter");
    }
    spec.pairs = doc.pairs;
    return spec;
  }

  SemiCoextensionSpec to_semi_spec(SpecDocument const& doc, TnormFn base) {
    if (doc.kind != SpecDocument::Kind::semi) {
      throw Error("not a semilattice coextension spec");
    }
    SemiCoextensionSpec spec;
    spec.partition      = partition_of(doc);
    spec.quotient       = quotient_of(doc, spec.partition, std::move(base));
    std::size_t const n = spec.partition.size();
    spec.nu.assign(n, std::nullopt);
    for (auto const& [cls, o] : doc.numap) {
      check_index(cls, n, "numap");
      if (spec.nu[cls]) {
        throw Error("duplicate numap line for class " + std::to_string(cls));
      }
      spec.nu[cls] = o;
    }
    if (!doc.rho.empty()) {
      throw Error("rho lines only apply to an Archimedean filter");
    }
    spec.pairs = doc.pairs;
    return spec;
  }

  TnormFn LoadedSpec::fn() const {
    if (arch) {
      std::shared_ptr<ArchCoextension const> c = arch;
      return [c](double a, double b) { return c->evaluate(a, b); };
    }
    if (semi) {
      std::shared_ptr<SemiCoextension const> c = semi;
      return [c](double a, double b) { return c->evaluate(a, b); };
    }
    throw Error("a tomonoid table is not a t-norm on [0,1]");
  }

  IntervalPartition const& LoadedSpec::partition() const {
    if (arch) {
      return arch->spec().partition;
    }
    if (semi) {
      return semi->spec().partition;
    }
    throw Error("a tomonoid table has no partition");
  }

  QuotientModel const& LoadedSpec::quotient() const {
    if (arch) {
      return arch->spec().quotient;
    }
    if (semi) {
      return semi->spec().quotient;
    }
    throw Error("a tomonoid table has no coextension quotient");
  }

  namespace {
    LoadedSpec load(SpecDocument doc, std::filesystem::path const& dir, int depth) {
      if (depth > 8) {
        throw Error("base specs nested too deeply");
      }
      LoadedSpec out;
      TnormFn    base;
      if (doc.base) {
        std::filesystem::path const p = dir / *doc.base;
        LoadedSpec inner = load(read_spec_file(p), p.parent_path(), depth + 1);
        base             = inner.fn();
      }
      switch (doc.kind) {
        case SpecDocument::Kind::tomonoid:
          out.tomonoid = tomonoid_of(doc);
          break;
        case SpecDocument::Kind::arch:
          out.arch = std::make_shared<ArchCoextension>(to_arch_spec(doc, base));
          break;
        case SpecDocument::Kind::semi:
          out.semi = std::make_shared<SemiCoextension>(to_semi_spec(doc, base));
          break;
      }
      out.doc = std::move(doc);
      return out;
    }
  }  // namespace

  LoadedSpec load_spec(SpecDocument doc, std::filesystem::path const& dir) {
    return load(std::move(doc), dir, 0);
  }

  LoadedSpec load_spec_file(std::filesystem::path const& path) {
    return load(read_spec_file(path), path.parent_path(), 0);
  }

}  // namespace tnorm
