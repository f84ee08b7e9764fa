#include "cli.hpp"

#include "evenquads/census.hpp"
#include "evenquads/classify.hpp"
#include "evenquads/deck.hpp"
#include "evenquads/enumerate.hpp"
#include "evenquads/http_server.hpp"
#include "evenquads/io.hpp"
#include "evenquads/service.hpp"
#include "evenquads/structure.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace evenquads::cli {

namespace {

enum class Format { Text, Csv, Doc };

const std::map<std::string, Format> kFormats = {
    {"text", Format::Text}, {"csv", Format::Csv}, {"doc", Format::Doc}};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

unsigned default_threads() {
  if (const char* env = std::getenv("QAP_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 256) {
      throw UsageError("QAP_THREADS must be an integer in 1..256");
    }
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string dims_text(const std::map<int, BigInt>& dims) {
  std::string s;
  for (const auto& [d, c] : dims) {
    s += (s.empty() ? "" : "  ") + std::to_string(d) + ":" + with_commas(c);
  }
  return s.empty() ? "-" : s;
}

// ---- count ---------------------------------------------------------------

int cmd_count(std::ostream& out, int n, int k, Format fmt) {
  const CensusRow row = census_row(k, n);
  switch (fmt) {
  case Format::Doc:
    out << census_row_json(row).dump(2) << "\n";
    break;
  case Format::Csv:
    out << "k,n,dimension,count\n";
    for (const auto& [d, c] : row.by_dimension) {
      out << k << "," << n << "," << d << "," << c << "\n";
    }
    out << k << "," << n << ",total," << row.total << "\n";
    break;
  case Format::Text:
    out << "Q(" << k << "," << n << ") = " << with_commas(row.total) << "\n";
    for (const auto& [d, c] : row.by_dimension) {
      out << "  dimension " << d << ": " << with_commas(c) << "\n";
    }
    break;
  }
  return 0;
}

// ---- enumerate -----------------------------------------------------------

struct EnumerateFlags {
  int n = 0;
  int max_k = 0;
  unsigned threads = 0;
  bool by_class = false;
  std::uint64_t node_budget = 0;
};

EnumerationResult run_enumeration(const EnumerateFlags& f) {
  if (f.n < 1 || f.n > 8) {
    throw UsageError("enumeration supports 1 <= n <= 8");
  }
  if (f.max_k < 1) {
    throw UsageError("--max-k must be positive");
  }
  EnumerationOptions opt;
  opt.n = f.n;
  opt.max_k = f.max_k;
  opt.threads = f.threads == 0 ? default_threads() : f.threads;
  opt.by_class = f.by_class;
  opt.node_budget = f.node_budget;
  return enumerate_census(opt);
}

int cmd_enumerate(std::ostream& out, const EnumerateFlags& f, Format fmt) {
  const EnumerationResult r = run_enumeration(f);
  if (fmt == Format::Doc) {
    out << enumeration_json(r).dump(2) << "\n";
    return 0;
  }
  if (fmt == Format::Csv) {
    out << "k,dimension,class,count\n";
    if (f.by_class) {
      for (const auto& c : r.classes) {
        out << c.cls.k << "," << c.cls.dim << "," << c.cls.label() << "," << c.count << "\n";
      }
      for (const auto& row : r.rows) {
        if (row.k <= 9) {
          continue;
        }
        for (const auto& [d, c] : row.by_dimension) {
          out << row.k << "," << d << ",*," << c << "\n";
        }
      }
    } else {
      for (const auto& row : r.rows) {
        for (const auto& [d, c] : row.by_dimension) {
          out << row.k << "," << d << ",*," << c << "\n";
        }
      }
    }
    return 0;
  }
  out << "caps of Z_2^" << r.n << " with k <= " << r.max_k << "\n";
  out << std::setw(3) << "k" << std::setw(16) << "total" << "  by dimension\n";
  for (const auto& row : r.rows) {
    std::map<int, BigInt> dims(row.by_dimension.begin(), row.by_dimension.end());
    out << std::setw(3) << row.k << std::setw(16) << with_commas(row.total) << "  "
        << dims_text(dims) << "\n";
  }
  if (f.by_class) {
    out << "classes\n";
    for (const auto& c : r.classes) {
      out << "  " << std::left << std::setw(12) << c.cls.to_string() << std::right
          << std::setw(16) << with_commas(c.count) << "\n";
    }
  }
  if (!r.complete) {
    out << "INCOMPLETE: node budget exhausted, counts are lower bounds\n";
  }
  return 0;
}

// ---- classify ------------------------------------------------------------

int cmd_classify(std::ostream& out, const std::string& path, Format fmt) {
  const Cap cap = parse_cap_file(read_input(path));
  const int k = static_cast<int>(cap.size());
  const ExcludeMap ex = exclude_map(cap);
  const StructureReport report = check_structure(cap);
  std::optional<CapClass> cls;
  if (k >= 1 && k <= 9) {
    cls = classify(cap);
  }
  const std::optional<int> dim = k == 0 ? std::nullopt : std::optional(cap_dimension(cap));

  if (fmt == Format::Doc) {
    Json points = Json::array();
    for (const auto& p : cap.points()) {
      points.push_back(p.to_binary());
    }
    Json doc{{"n", cap.n()},
             {"k", k},
             {"points", points},
             {"dimension", dim ? Json(*dim) : Json(nullptr)},
             {"class", cls ? class_json(*cls) : Json(nullptr)},
             {"multiplicities", ex.multiplicity_multiset()},
             {"completes_span", k == 0 ? Json(nullptr) : Json(completes_span(cap))},
             {"complete_in_ambient", is_complete_in_ambient(cap)},
             {"structure", structure_json(report)}};
    out << doc.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << "k,n,dimension,class,excludes,max_multiplicity,structure_ok\n";
    out << k << "," << cap.n() << "," << (dim ? std::to_string(*dim) : "") << ","
        << (cls ? cls->label() : "") << "," << ex.size() << "," << ex.max_multiplicity() << ","
        << (report.ok() ? "true" : "false") << "\n";
  } else {
    out << "cap of " << k << " points in Z_2^" << cap.n() << "\n";
    out << "dimension: " << (dim ? std::to_string(*dim) : "-") << "\n";
    if (cls) {
      out << "class: " << cls->to_string() << "\n";
      if (cls->odd_sum_m) {
        out << "odd-sum presentation: m = " << *cls->odd_sum_m << "\n";
      }
    } else if (k > 9) {
      out << "class: not classified for k > 9\n";
    }
    out << "excludes: " << ex.size() << " points, multiplicities";
    for (int m : ex.multiplicity_multiset()) {
      out << " " << m;
    }
    out << "\n";
    if (k > 0) {
      out << "completes span: " << (completes_span(cap) ? "yes" : "no") << "\n";
    }
    out << "complete in ambient: " << (is_complete_in_ambient(cap) ? "yes" : "no") << "\n";
    out << "structure:\n";
    for (const auto& c : report.clauses) {
      out << "  " << (c.holds ? "ok  " : "FAIL") << " " << c.name;
      if (!c.detail.empty()) {
        out << " (" << c.detail << ")";
      }
      out << "\n";
    }
  }
  return report.ok() ? 0 : kExitMismatch;
}

// ---- probability ---------------------------------------------------------

int cmd_probability(std::ostream& out, int n, bool exact, std::uint64_t samples,
                    std::uint64_t seed, Format fmt) {
  if (n < 1 || n > 6) {
    throw UsageError("probability tables cover 1 <= n <= 6");
  }
  const auto rows = probability_table(n);
  std::vector<MonteCarloEstimate> mc;
  if (samples > 0) {
    for (const auto& r : rows) {
      mc.push_back(monte_carlo_quad_probability(r.k, n, samples, seed + static_cast<std::uint64_t>(r.k)));
    }
  }
  auto z_score = [&](std::size_t i) {
    const double exact_p = rows[i].p_quad.convert_to<double>();
    const double sigma = std::sqrt(exact_p * (1.0 - exact_p) / static_cast<double>(samples));
    return sigma == 0.0 ? 0.0 : (mc[i].p_quad - exact_p) / sigma;
  };

  if (fmt == Format::Doc) {
    Json doc = probability_json(rows, n);
    for (std::size_t i = 0; i < mc.size(); ++i) {
      doc["rows"][i]["monte_carlo"] = Json{{"samples", mc[i].trials},
                                           {"with_quad", mc[i].with_quad},
                                           {"p_quad", mc[i].p_quad},
                                           {"z", z_score(i)}};
    }
    out << doc.dump(2) << "\n";
    return 0;
  }
  if (fmt == Format::Csv) {
    out << "k,p_no_quad,p_quad";
    if (exact) {
      out << ",p_no_quad_exact,p_quad_exact";
    }
    if (!mc.empty()) {
      out << ",samples,with_quad,z";
    }
    out << "\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out << rows[i].k << "," << rows[i].p_no_quad_decimal() << "," << rows[i].p_quad_decimal();
      if (exact) {
        out << "," << rows[i].p_no_quad << "," << rows[i].p_quad;
      }
      if (!mc.empty()) {
        out << "," << mc[i].trials << "," << mc[i].with_quad << "," << std::fixed
            << std::setprecision(3) << z_score(i) << std::defaultfloat;
      }
      out << "\n";
    }
    return 0;
  }
  out << "k uniformly random points of Z_2^" << n << "\n";
  out << std::setw(3) << "k" << std::setw(15) << "P(no quad)" << std::setw(15) << "P(quad)";
  if (exact) {
    out << "  exact P(no quad)";
  }
  if (!mc.empty()) {
    out << "  sampled P(quad)     z";
  }
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out << std::setw(3) << rows[i].k << std::setw(15) << rows[i].p_no_quad_decimal()
        << std::setw(15) << rows[i].p_quad_decimal();
    if (exact) {
      out << "  " << rows[i].p_no_quad;
    }
    if (!mc.empty()) {
      out << "  " << std::fixed << std::setprecision(6) << std::setw(15) << mc[i].p_quad
          << std::setprecision(2) << std::setw(6) << z_score(i) << std::defaultfloat;
    }
    out << "\n";
  }
  return 0;
}

// ---- tables --------------------------------------------------------------

int cmd_tables(std::ostream& out, int n, bool verify, unsigned threads, Format fmt) {
  if (n < 1 || n > kMaxAmbientDim) {
    throw UsageError("n must be in 1..16");
  }
  const ExtremalTables t = extremal_tables(n);
  std::vector<std::pair<int, std::optional<CensusRow>>> census;
  for (int k = 1; k <= 10; ++k) {
    try {
      census.emplace_back(k, census_row(k, n));
    } catch (const UnsupportedCount&) {
      census.emplace_back(k, std::nullopt);
    }
  }

  // Enumerated cross-check of r_k and M(r).
  bool mismatch = false;
  std::vector<std::string> checks;
  if (verify) {
    if (n > 6) {
      throw UsageError("--verify enumerates and supports n <= 6");
    }
    EnumerateFlags f;
    f.n = n;
    f.max_k = std::min(10, max_cap_size(n) + 1);
    f.threads = threads;
    const EnumerationResult r = run_enumeration(f);
    for (const auto& [k, rk] : t.min_dimension) {
      if (k > f.max_k) {
        continue;
      }
      const auto& dims = r.row(k).by_dimension;
      const bool ok = dims.empty() ? rk > n : dims.begin()->first == rk;
      mismatch |= !ok;
      checks.push_back("r_" + std::to_string(k) + " = " + std::to_string(rk) + ": " +
                       (dims.empty() ? "no " + std::to_string(k) + "-cap in Z_2^" + std::to_string(n)
                                     : "smallest enumerated dimension " +
                                           std::to_string(dims.begin()->first)) +
                       (ok ? " PASS" : " FAIL"));
    }
    for (const auto& [dim, m] : t.max_cap_size) {
      int largest = 0;
      for (const auto& row : r.rows) {
        if (!row.by_dimension.empty() && row.by_dimension.begin()->first <= dim) {
          largest = row.k;
        }
      }
      const bool ok = largest == m;
      mismatch |= !ok;
      checks.push_back("M(" + std::to_string(dim) + ") = " + std::to_string(m) +
                       ": largest enumerated cap in dimension <= " + std::to_string(dim) +
                       " has " + std::to_string(largest) + " points" + (ok ? " PASS" : " FAIL"));
    }
  }

  if (fmt == Format::Doc) {
    Json doc{{"n", n}};
    for (const auto& [k, r] : t.min_dimension) {
      doc["min_dimension"][std::to_string(k)] = r;
    }
    for (const auto& [r, m] : t.max_cap_size) {
      doc["max_cap_size"][std::to_string(r)] = m;
    }
    doc["census"] = Json::array();
    for (const auto& [k, row] : census) {
      doc["census"].push_back(row ? census_row_json(*row) : Json{{"k", k}, {"n", n}, {"supported", false}});
    }
    if (verify) {
      doc["verification"] = checks;
      doc["verified"] = !mismatch;
    }
    out << doc.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << "table,key,value\n";
    for (const auto& [k, r] : t.min_dimension) {
      out << "min_dimension," << k << "," << r << "\n";
    }
    for (const auto& [r, m] : t.max_cap_size) {
      out << "max_cap_size," << r << "," << m << "\n";
    }
    for (const auto& [k, row] : census) {
      out << "cap_count," << k << "," << (row ? row->total.str() : "") << "\n";
    }
  } else {
    out << "smallest dimension r_k of a flat holding a k-cap\n  k:  ";
    for (const auto& [k, r] : t.min_dimension) {
      out << std::setw(3) << k;
    }
    out << "\n  r_k:";
    for (const auto& [k, r] : t.min_dimension) {
      out << std::setw(3) << r;
    }
    out << "\n\nlargest cap M(r) in an r-flat\n  r:   ";
    for (const auto& [r, m] : t.max_cap_size) {
      out << std::setw(3) << r;
    }
    out << "\n  M(r):";
    for (const auto& [r, m] : t.max_cap_size) {
      out << std::setw(3) << m;
    }
    out << "\n\nk-caps in Z_2^" << n << "\n";
    for (const auto& [k, row] : census) {
      out << std::setw(4) << k << std::setw(22)
          << (row ? with_commas(row->total) : std::string("no closed form")) << "  "
          << (row ? dims_text(row->by_dimension) : "") << "\n";
    }
    if (verify) {
      out << "\nenumeration cross-check\n";
      for (const auto& c : checks) {
        out << "  " << c << "\n";
      }
    }
  }
  return mismatch ? kExitMismatch : 0;
}

// ---- verify --------------------------------------------------------------

int cmd_verify(std::ostream& out, EnumerateFlags f, bool max_k_given, Format fmt) {
  if (f.n < 1 || f.n > 8) {
    throw UsageError("verify enumerates and supports 1 <= n <= 8");
  }
  if (!max_k_given) {
    f.max_k = f.n <= 6 ? std::min(10, max_cap_size(f.n) + 1) : 5;
  }
  if (f.n >= 7 && f.max_k >= 10) {
    throw UsageError("no closed form to verify against for k >= 10 when n >= 7");
  }
  const EnumerationResult r = run_enumeration(f);

  struct Cell {
    int k;
    std::string what;
    std::string formula;
    std::string enumerated;
    bool ok;
  };
  std::vector<Cell> cells;
  for (int k = 1; k <= f.max_k; ++k) {
    const CensusRow row = census_row(k, f.n);
    const auto& got = r.row(k).by_dimension;
    std::set<int> dims;
    for (const auto& [d, c] : row.by_dimension) {
      dims.insert(d);
    }
    for (const auto& [d, c] : got) {
      dims.insert(d);
    }
    for (int d : dims) {
      const BigInt expect = row.by_dimension.contains(d) ? row.by_dimension.at(d) : BigInt(0);
      const std::uint64_t have = got.contains(d) ? got.at(d) : 0;
      cells.push_back({k, "dim " + std::to_string(d), expect.str(), std::to_string(have),
                       expect == BigInt(have)});
    }
    cells.push_back({k, "total", row.total.str(), std::to_string(r.row(k).total),
                     row.total == BigInt(r.row(k).total)});
  }
  if (f.by_class) {
    for (const auto& c : r.classes) {
      const BigInt expect = count_class(c.cls, f.n);
      cells.push_back({c.cls.k, c.cls.to_string(), expect.str(), std::to_string(c.count),
                       expect == BigInt(c.count)});
    }
  }
  const bool complete = r.complete;
  const auto passed = static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return c.ok; }));
  const bool all_ok = complete && passed == cells.size();

  if (fmt == Format::Doc) {
    Json doc{{"n", f.n}, {"max_k", f.max_k}, {"complete", complete}, {"pass", all_ok}};
    doc["cells"] = Json::array();
    for (const auto& c : cells) {
      doc["cells"].push_back(Json{{"k", c.k},
                                  {"what", c.what},
                                  {"formula", c.formula},
                                  {"enumerated", c.enumerated},
                                  {"result", c.ok ? "PASS" : "FAIL"}});
    }
    out << doc.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << "k,what,formula,enumerated,result\n";
    for (const auto& c : cells) {
      out << c.k << "," << c.what << "," << c.formula << "," << c.enumerated << ","
          << (c.ok ? "PASS" : "FAIL") << "\n";
    }
  } else {
    out << "closed forms vs enumeration in Z_2^" << f.n << ", k = 1.." << f.max_k << "\n";
    out << std::setw(3) << "k" << "  " << std::left << std::setw(12) << "what" << std::right
        << std::setw(16) << "formula" << std::setw(16) << "enumerated" << "  result\n";
    for (const auto& c : cells) {
      out << std::setw(3) << c.k << "  " << std::left << std::setw(12) << c.what << std::right
          << std::setw(16) << c.formula << std::setw(16) << c.enumerated << "  "
          << (c.ok ? "PASS" : "FAIL") << "\n";
    }
    if (!complete) {
      out << "INCOMPLETE: node budget exhausted\n";
    }
    out << passed << "/" << cells.size() << " PASS\n";
  }
  return all_ok ? 0 : kExitMismatch;
}

// ---- deck ----------------------------------------------------------------

void print_cards(std::ostream& out, const std::vector<Card>& cards, Format fmt) {
  if (fmt == Format::Doc) {
    Json arr = Json::array();
    for (const auto& c : cards) {
      arr.push_back(card_json(c));
    }
    out << arr.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << "card,binary\n";
    for (const auto& c : cards) {
      out << c.to_string() << "," << card_to_point(c).to_binary() << "\n";
    }
  } else {
    for (const auto& c : cards) {
      out << c.to_string() << "\n";
    }
  }
}

int cmd_find_quads(std::ostream& out, const std::string& path, Format fmt) {
  const auto layout = parse_layout(read_input(path));
  const auto quads = find_all_quads(layout);
  if (fmt == Format::Doc) {
    Json arr = Json::array();
    for (const auto& q : quads) {
      Json one = Json::array();
      for (const auto& c : q) {
        one.push_back(c.to_string());
      }
      arr.push_back(std::move(one));
    }
    out << Json{{"cards", layout.size()}, {"quads", arr}}.dump(2) << "\n";
  } else if (fmt == Format::Csv) {
    out << "card1,card2,card3,card4\n";
    for (const auto& q : quads) {
      out << q[0].to_string() << "," << q[1].to_string() << "," << q[2].to_string() << ","
          << q[3].to_string() << "\n";
    }
  } else {
    out << quads.size() << (quads.size() == 1 ? " quad" : " quads") << " among " << layout.size()
        << " cards\n";
    for (const auto& q : quads) {
      out << "  " << q[0].to_string() << "  " << q[1].to_string() << "  " << q[2].to_string()
          << "  " << q[3].to_string() << "\n";
    }
  }
  return 0;
}

std::vector<ParityConstraint> parse_constraints(const std::vector<std::string>& specs) {
  std::vector<ParityConstraint> out;
  for (const auto& s : specs) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
      throw UsageError("constraint must look like MASK:PARITY, e.g. 001100:1");
    }
    const Point mask = Point::parse(s.substr(0, colon), 6);
    const std::string parity = s.substr(colon + 1);
    if (parity != "0" && parity != "1") {
      throw UsageError("constraint parity must be 0 or 1");
    }
    out.push_back(ParityConstraint{mask.bits(), parity == "1" ? 1 : 0});
  }
  return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"EvenQuads cap toolkit: counting, enumeration, classification and probabilities"};
  app.name("qap");
  app.require_subcommand(1);

  Format fmt = Format::Text;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", fmt, "Output format: text, csv or doc (JSON)")
        ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  };

  std::function<int()> action;

  int count_n = 0;
  int count_k = 0;
  auto* count = app.add_subcommand("count", "Closed-form k-cap count and per-dimension split");
  count->add_option("--n", count_n, "Ambient dimension")->required()->check(CLI::Range(1, 16));
  count->add_option("--k", count_k, "Cap size")->required()->check(CLI::PositiveNumber);
  add_format(count);
  count->callback([&] { action = [&] { return cmd_count(out, count_n, count_k, fmt); }; });

  EnumerateFlags ef;
  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive enumeration of caps");
  enumerate->add_option("--n", ef.n, "Ambient dimension (1..8)")->required()->check(CLI::Range(1, 8));
  enumerate->add_option("--max-k", ef.max_k, "Largest cap size")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--threads", ef.threads, "Worker threads (default: QAP_THREADS or all cores)")
      ->check(CLI::Range(1, 256));
  enumerate->add_flag("--by-class", ef.by_class, "Also tally equivalence classes (k <= 9)");
  enumerate->add_option("--node-budget", ef.node_budget, "Stop after this many search nodes");
  add_format(enumerate);
  enumerate->callback([&] { action = [&] { return cmd_enumerate(out, ef, fmt); }; });

  std::string classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "Class label and structure report of a cap file");
  classify_cmd->add_option("--in", classify_in, "Cap file (JSON), '-' for stdin")->required();
  add_format(classify_cmd);
  classify_cmd->callback([&] { action = [&] { return cmd_classify(out, classify_in, fmt); }; });

  int prob_n = 6;
  bool prob_exact = false;
  std::uint64_t prob_samples = 0;
  std::uint64_t prob_seed = 1;
  auto* probability = app.add_subcommand("probability", "Exact probability of a quad among k random cards");
  probability->add_option("--n", prob_n, "Ambient dimension (1..6)")->capture_default_str()->check(CLI::Range(1, 6));
  probability->add_flag("--exact", prob_exact, "Also print exact rationals");
  probability->add_option("--samples", prob_samples, "Monte Carlo samples per k (0: none)");
  probability->add_option("--seed", prob_seed, "Monte Carlo seed");
  add_format(probability);
  probability->callback([&] {
    action = [&] { return cmd_probability(out, prob_n, prob_exact, prob_samples, prob_seed, fmt); };
  });

  int tables_n = 6;
  bool tables_verify = false;
  unsigned tables_threads = 0;
  auto* tables = app.add_subcommand("tables", "Extremal tables r_k, M(r) and the census of Z_2^n");
  tables->add_option("--n", tables_n, "Ambient dimension")->capture_default_str()->check(CLI::Range(1, 16));
  tables->add_flag("--verify", tables_verify, "Cross-check r_k and M(r) by enumeration (n <= 6)");
  tables->add_option("--threads", tables_threads, "Worker threads for --verify")->check(CLI::Range(1, 256));
  add_format(tables);
  tables->callback([&] {
    action = [&] { return cmd_tables(out, tables_n, tables_verify, tables_threads, fmt); };
  });

  EnumerateFlags vf;
  auto* verify = app.add_subcommand("verify", "Enumeration against closed forms; exit 1 on mismatch");
  verify->add_option("--n", vf.n, "Ambient dimension (1..8)")->required()->check(CLI::Range(1, 8));
  auto* verify_max_k =
      verify->add_option("--max-k", vf.max_k, "Largest cap size")->check(CLI::PositiveNumber);
  verify->add_option("--threads", vf.threads, "Worker threads")->check(CLI::Range(1, 256));
  verify->add_flag("--by-class", vf.by_class, "Also verify per-class counts");
  add_format(verify);
  verify->callback([&] {
    action = [&] { return cmd_verify(out, vf, verify_max_k->count() > 0, fmt); };
  });

  auto* deck = app.add_subcommand("deck", "EvenQuads card utilities");
  deck->require_subcommand(1);
  std::string layout_in;
  auto* find_quads = deck->add_subcommand("find-quads", "List every quad in a layout");
  find_quads->add_option("--in", layout_in, "Layout file (card names or 6-bit binaries), '-' for stdin")
      ->required();
  add_format(find_quads);
  find_quads->callback([&] { action = [&] { return cmd_find_quads(out, layout_in, fmt); }; });

  std::vector<std::string> complete_cards;
  auto* complete = deck->add_subcommand("complete", "The card completing a quad with three cards");
  complete->add_option("cards", complete_cards, "Three cards, e.g. 1-Green-Heart")->expected(3)->required();
  add_format(complete);
  complete->callback([&] {
    action = [&] {
      const Card c = complete_quad(Card::parse(complete_cards[0]), Card::parse(complete_cards[1]),
                                   Card::parse(complete_cards[2]));
      print_cards(out, {c}, fmt);
      return 0;
    };
  });

  std::uint64_t deal_seed = 0;
  int deal_k = 12;
  auto* deal_cmd = deck->add_subcommand("deal", "Deal k random cards");
  deal_cmd->add_option("--seed", deal_seed, "Random seed")->required();
  deal_cmd->add_option("--k", deal_k, "Number of cards")->capture_default_str()->check(CLI::Range(0, kDeckSize));
  add_format(deal_cmd);
  deal_cmd->callback([&] {
    action = [&] {
      print_cards(out, deal(deal_seed, deal_k), fmt);
      return 0;
    };
  });

  std::vector<std::string> constraint_specs;
  auto* sub = deck->add_subcommand("sub-deck", "Cards on an affine subspace given by parity constraints");
  sub->add_option("--constraint", constraint_specs, "MASK:PARITY, e.g. 001100:1 (repeatable)");
  add_format(sub);
  sub->callback([&] {
    action = [&] {
      print_cards(out, sub_deck(parse_constraints(constraint_specs)), fmt);
      return 0;
    };
  });

  std::string serve_host = "127.0.0.1";
  int serve_port = 8080;
  auto* serve = app.add_subcommand("serve", "HTTP service for the cap visualizer");
  serve->add_option("--host", serve_host, "Bind address")->capture_default_str();
  serve->add_option("--port", serve_port, "Port (0 picks a free one)")->capture_default_str()->check(CLI::Range(0, 65535));
  serve->callback([&] {
    action = [&] {
      Service service;
      HttpServer server(service);
      const int port = server.bind(serve_host, serve_port);
      out << "listening on http://" << serve_host << ":" << port << std::endl;
      server.listen();
      return 0;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}

} // namespace evenquads::cli
