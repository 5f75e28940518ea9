// duple: invariants and certificates for simple cyclic covers of the plane.
//
// Subcommands:
//   hodge        Hodge numbers of X_{d,m} (series oracle, or exact linear
//                algebra for a concrete branch curve)
//   picard-check Picard-rank-1 witness: smoothness heuristic, summand
//                condition, T-level and R-level surjectivity certificates
//   seshadri     certified Seshadri interval [sqrt(d)-d/m, sqrt(d)] with a
//                machine-checkable derivation trace
//   table        seshadri over a (d, m) grid
//   hilbert      Hilbert series prefix of the Milnor algebra
//
// Exit codes: 0 success/verified, 1 invalid config or internal error,
// 2 theorem hypothesis unmet, 3 certificate negative (resample the curve).
//
// DUPLE_THREADS caps the worker threads for table grids; outputs do not
// depend on it.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "duple/duple.hpp"

namespace {

using duple::CoverDatum;
using duple::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitCertificate = 3;

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::string spec;
};

Range parse_range(const std::string& s) {
  auto parse_int = [&](const std::string& part) {
    std::size_t pos = 0;
    long long v = std::stoll(part, &pos);
    if (pos != part.size()) throw std::invalid_argument("trailing junk");
    return v;
  };
  Range r;
  r.spec = s;
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = parse_int(s);
    } else {
      r.lo = parse_int(s.substr(0, dots));
      r.hi = parse_int(s.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed range '" + s + "' (expected N or N..M)");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
  return r;
}

unsigned worker_threads() {
  if (const char* env = std::getenv("DUPLE_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Ordered parallel map: results land by index, so the output never depends
// on scheduling.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned threads = std::min<std::size_t>(worker_threads(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

std::string float_repr(double v) { return nlohmann::json(duple::display_float(v)).dump(); }

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + output_path + "'");
  out << text;
}

std::string render_json(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- hodge

struct HodgeOptions {
  std::int64_t d = 0, m = 0;
  std::string f_source = "series";
  std::uint64_t seed = 1;
  std::uint64_t prime = duple::kDefaultPrime;
  std::string format = "json";
  std::string output;
};

duple::RationalPoly resolve_branch_curve(const CoverDatum& cover, const std::string& source,
                                         std::uint64_t seed) {
  if (source == "fermat") return duple::fermat_branch_curve(cover);
  if (source == "random") return duple::random_branch_curve(cover, seed);
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot read polynomial file '" + source + "'");
  auto doc = duple::poly_from_json(nlohmann::json::parse(in));
  if (doc.ws.m != cover.m || doc.degree != cover.branch_degree()) {
    throw std::invalid_argument("polynomial file does not match (d, m): expected degree " +
                                std::to_string(cover.branch_degree()) + " with weights (1,1,1," +
                                std::to_string(cover.m) + ")");
  }
  return doc.poly;
}

ordered_json hodge_config(const HodgeOptions& o) {
  ordered_json cfg;
  cfg["command"] = "hodge";
  cfg["d"] = o.d;
  cfg["m"] = o.m;
  cfg["f"] = o.f_source;
  cfg["seed"] = o.seed;
  cfg["prime"] = o.prime;
  cfg["format"] = o.format;
  return cfg;
}

int run_hodge(const HodgeOptions& o) {
  CoverDatum cover(o.d, o.m);
  duple::require_field_prime(o.prime);
  duple::HodgeReport rep =
      o.f_source == "series"
          ? duple::hodge_numbers(cover, o.prime)
          : duple::hodge_numbers(
                duple::MilnorData::make(cover, resolve_branch_curve(cover, o.f_source, o.seed)),
                o.prime);
  ordered_json j;
  j["config"] = hodge_config(o);
  ordered_json body = duple::hodge_report_to_json(rep);
  for (auto& [k, v] : body.items()) j[k] = v;

  if (o.format == "json") {
    emit(render_json(j), o.output);
  } else if (o.format == "csv") {
    std::ostringstream csv;
    csv << "# duple hodge d=" << o.d << " m=" << o.m << " f=" << o.f_source << " seed=" << o.seed
        << " prime=" << o.prime << "\n";
    csv << "d,m,h20,h11_prim,h11_full,h1_theta0,series_h20,series_h11_prim,series_h1_theta0,"
           "pushforward_pg,consistent,negative_degree\n";
    csv << o.d << "," << o.m << "," << rep.values.h20 << "," << rep.values.h11_prim << ","
        << rep.h11_full << "," << rep.values.h1_theta0 << "," << rep.series_oracle.h20 << ","
        << rep.series_oracle.h11_prim << "," << rep.series_oracle.h1_theta0 << ","
        << rep.pushforward_pg << "," << (rep.consistent ? "true" : "false") << ","
        << (rep.negative_degree ? "true" : "false") << "\n";
    emit(csv.str(), o.output);
  } else {  // md
    std::ostringstream md;
    md << "# Hodge numbers of X_{" << o.d << "," << o.m << "}\n\n";
    md << "| h20 | h11_prim | h11_full | h1_theta0 | consistent |\n";
    md << "| --- | --- | --- | --- | --- |\n";
    md << "| " << rep.values.h20 << " | " << rep.values.h11_prim << " | " << rep.h11_full << " | "
       << rep.values.h1_theta0 << " | " << (rep.consistent ? "yes" : "no") << " |\n";
    emit(md.str(), o.output);
  }
  return kExitOk;
}

// ---------------------------------------------------------- picard-check

struct PicardOptions {
  std::int64_t d = 0, m = 0;
  std::uint64_t seed = 1;
  std::uint64_t prime = duple::kDefaultPrime;
  std::uint64_t cross_prime = 0;  // 0 = off
  std::string output;
};

int run_picard_check(const PicardOptions& o) {
  CoverDatum cover(o.d, o.m);
  auto witness = duple::picard_rank_one_witness(cover, o.seed, o.prime);
  ordered_json j;
  ordered_json cfg;
  cfg["command"] = "picard-check";
  cfg["d"] = o.d;
  cfg["m"] = o.m;
  cfg["seed"] = o.seed;
  cfg["prime"] = o.prime;
  if (o.cross_prime) cfg["cross_prime"] = o.cross_prime;
  j["config"] = cfg;
  ordered_json body = duple::witness_to_json(witness);
  for (auto& [k, v] : body.items()) j[k] = v;

  bool verified = witness.verified;
  if (o.cross_prime) {
    auto cross = duple::picard_rank_one_witness(cover, o.seed, o.cross_prime);
    j["cross_check"] = duple::witness_to_json(cross);
    verified = verified && cross.verified;
  }
  j["f"] = duple::poly_to_json(witness.f, cover.weights(), cover.branch_degree());
  emit(render_json(j), o.output);
  return verified ? kExitOk : kExitCertificate;
}

// ------------------------------------------------------ seshadri / table

ordered_json seshadri_cell_json(const CoverDatum& cover) {
  return duple::seshadri_report_to_json(duple::seshadri_interval(cover));
}

std::string seshadri_csv_header() {
  return "d,m,status,lower_a,lower_b,upper_a,upper_b,rad,clamped,lower_float,upper_float\n";
}

std::string seshadri_csv_row(std::int64_t d, std::int64_t m) {
  std::ostringstream row;
  try {
    auto rep = duple::seshadri_interval(CoverDatum(d, m));
    row << d << "," << m << ",ok," << rep.lower.a().str() << "," << rep.lower.b().str() << ","
        << rep.upper.a().str() << "," << rep.upper.b().str() << "," << rep.upper.radicand() << ","
        << (rep.clamped ? "true" : "false") << "," << float_repr(rep.lower.to_double()) << ","
        << float_repr(rep.upper.to_double());
  } catch (const duple::hypothesis_error&) {
    row << d << "," << m << ",hypothesis m>=3 unmet,,,,,,,,";
  }
  row << "\n";
  return row.str();
}

struct SeshadriOptions {
  std::int64_t d = 0, m = 0;
  std::string format = "json";
  std::string output;
};

int run_seshadri(const SeshadriOptions& o) {
  CoverDatum cover(o.d, o.m);
  auto rep = duple::seshadri_interval(cover);  // throws hypothesis_error for m < 3
  if (o.format == "json") {
    ordered_json j;
    ordered_json cfg;
    cfg["command"] = "seshadri";
    cfg["d"] = o.d;
    cfg["m"] = o.m;
    cfg["format"] = o.format;
    j["config"] = cfg;
    ordered_json body = duple::seshadri_report_to_json(rep);
    for (auto& [k, v] : body.items()) j[k] = v;
    emit(render_json(j), o.output);
  } else if (o.format == "csv") {
    std::string csv = "# duple seshadri d=" + std::to_string(o.d) + " m=" + std::to_string(o.m) +
                      "\n" + seshadri_csv_header() + seshadri_csv_row(o.d, o.m);
    emit(csv, o.output);
  } else {
    std::ostringstream md;
    md << "# Seshadri interval for X_{" << o.d << "," << o.m << "}\n\n";
    md << "eps(L;x) in [" << rep.lower.str() << ", " << rep.upper.str() << "]"
       << (rep.clamped ? " (lower end <= 0: bound vacuous but correct)" : "") << "\n";
    emit(md.str(), o.output);
  }
  return kExitOk;
}

struct TableOptions {
  std::string d_spec = "2..4";
  std::string m_spec = "3..6";
  std::string format = "json";
  std::string output;
};

int run_table(const TableOptions& o) {
  Range dr = parse_range(o.d_spec), mr = parse_range(o.m_spec);
  if (dr.lo < 2) throw std::invalid_argument("table: d must be >= 2");
  if (mr.lo < 1) throw std::invalid_argument("table: m must be >= 1");
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t d = dr.lo; d <= dr.hi; ++d)
    for (std::int64_t m = mr.lo; m <= mr.hi; ++m) cells.emplace_back(d, m);

  // cells are independent; invalid ones are marked, not fatal
  std::vector<ordered_json> results(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    auto [d, m] = cells[i];
    try {
      results[i] = seshadri_cell_json(CoverDatum(d, m));
    } catch (const duple::hypothesis_error&) {
      results[i] = ordered_json{{"d", d}, {"m", m}, {"error", "hypothesis m>=3 unmet"}};
    }
  });

  ordered_json cfg;
  cfg["command"] = "table";
  cfg["d"] = o.d_spec;
  cfg["m"] = o.m_spec;
  cfg["format"] = o.format;

  if (o.format == "json") {
    ordered_json j;
    j["config"] = cfg;
    j["cells"] = results;
    emit(render_json(j), o.output);
  } else if (o.format == "csv") {
    std::ostringstream csv;
    csv << "# duple table d=" << o.d_spec << " m=" << o.m_spec << "\n" << seshadri_csv_header();
    for (auto [d, m] : cells) csv << seshadri_csv_row(d, m);
    emit(csv.str(), o.output);
  } else {
    std::ostringstream md;
    md << "# Seshadri intervals\n\n| d | m | interval | clamped |\n| --- | --- | --- | --- |\n";
    for (auto [d, m] : cells) {
      md << "| " << d << " | " << m << " | ";
      try {
        auto rep = duple::seshadri_interval(CoverDatum(d, m));
        md << "[" << rep.lower.str() << ", " << rep.upper.str() << "] | "
           << (rep.clamped ? "yes" : "no") << " |\n";
      } catch (const duple::hypothesis_error&) {
        md << "hypothesis m>=3 unmet | - |\n";
      }
    }
    emit(md.str(), o.output);
  }
  return kExitOk;
}

// -------------------------------------------------------------- hilbert

struct HilbertOptions {
  std::int64_t d = 0, m = 0;
  std::int64_t order = -1;  // default: 2dm-m-3
  std::string format = "json";
  std::string output;
};

int run_hilbert(const HilbertOptions& o) {
  CoverDatum cover(o.d, o.m);
  std::int64_t dm = cover.branch_degree();
  std::int64_t order = o.order >= 0 ? o.order : std::max<std::int64_t>(2 * dm - o.m - 3, 0);
  auto coeffs = duple::milnor_series(cover, order);
  std::array<std::int64_t, 3> marked = {dm - o.m - 3, 2 * dm - o.m - 3, dm};

  ordered_json cfg;
  cfg["command"] = "hilbert";
  cfg["d"] = o.d;
  cfg["m"] = o.m;
  cfg["order"] = order;
  cfg["format"] = o.format;

  auto marks_of = [&](std::int64_t k) {
    std::vector<std::string> marks;
    if (k == marked[0]) marks.push_back("h20");
    if (k == marked[1]) marks.push_back("h11_prim");
    if (k == marked[2]) marks.push_back("h1_theta0");
    return marks;
  };

  if (o.format == "json") {
    ordered_json j;
    j["config"] = cfg;
    j["d"] = o.d;
    j["m"] = o.m;
    j["order"] = order;
    j["coeffs"] = coeffs;
    j["marked_degrees"] = ordered_json{
        {"h20", marked[0]}, {"h11_prim", marked[1]}, {"h1_theta0", marked[2]}};
    emit(render_json(j), o.output);
  } else if (o.format == "csv") {
    std::ostringstream csv;
    csv << "# duple hilbert d=" << o.d << " m=" << o.m << " order=" << order << "\n";
    csv << "k,coeff,marks\n";
    for (std::int64_t k = 0; k <= order; ++k) {
      csv << k << "," << coeffs[static_cast<std::size_t>(k)] << ",";
      auto marks = marks_of(k);
      for (std::size_t i = 0; i < marks.size(); ++i) csv << (i ? ";" : "") << marks[i];
      csv << "\n";
    }
    emit(csv.str(), o.output);
  } else {
    std::ostringstream md;
    md << "# Milnor algebra Hilbert series of X_{" << o.d << "," << o.m << "} (up to t^" << order
       << ")\n\n";
    for (std::int64_t k = 0; k <= order; ++k) {
      md << (k ? ", " : "") << coeffs[static_cast<std::size_t>(k)];
      auto marks = marks_of(k);
      if (!marks.empty()) {
        md << " [";
        for (std::size_t i = 0; i < marks.size(); ++i) md << (i ? ";" : "") << marks[i];
        md << "]";
      }
    }
    md << "\n";
    emit(md.str(), o.output);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants and certificates for simple cyclic covers of the plane"};
  app.require_subcommand(1);

  auto add_format = [](CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv", "md"}))
        ->capture_default_str();
  };

  HodgeOptions hodge;
  auto* cmd_hodge = app.add_subcommand("hodge", "Hodge numbers of X_{d,m}");
  cmd_hodge->add_option("--d", hodge.d, "cover degree d >= 2")->required();
  cmd_hodge->add_option("--m", hodge.m, "weight of w, m >= 1")->required();
  cmd_hodge->add_option("--f", hodge.f_source,
                        "branch curve: 'fermat', 'random', a polynomial JSON file, or 'series' "
                        "for the general-curve closed form");
  cmd_hodge->add_option("--seed", hodge.seed, "seed for --f random")->capture_default_str();
  cmd_hodge->add_option("--prime", hodge.prime, "certifying prime")->capture_default_str();
  add_format(cmd_hodge, hodge.format);
  cmd_hodge->add_option("--output", hodge.output, "write to file instead of stdout");

  PicardOptions picard;
  auto* cmd_picard = app.add_subcommand("picard-check", "Picard-rank-1 witness for (d, m)");
  cmd_picard->add_option("--d", picard.d)->required();
  cmd_picard->add_option("--m", picard.m)->required();
  cmd_picard->add_option("--seed", picard.seed)->capture_default_str();
  cmd_picard->add_option("--prime", picard.prime)->capture_default_str();
  cmd_picard->add_option("--cross-prime", picard.cross_prime,
                         "re-run the certificates at a second prime");
  cmd_picard->add_option("--output", picard.output);

  SeshadriOptions seshadri;
  auto* cmd_seshadri = app.add_subcommand("seshadri", "certified Seshadri interval");
  cmd_seshadri->add_option("--d", seshadri.d)->required();
  cmd_seshadri->add_option("--m", seshadri.m)->required();
  add_format(cmd_seshadri, seshadri.format);
  cmd_seshadri->add_option("--output", seshadri.output);

  TableOptions table;
  auto* cmd_table = app.add_subcommand("table", "Seshadri intervals over a (d, m) grid");
  cmd_table->add_option("--d", table.d_spec, "d range, e.g. 2..4")->required();
  cmd_table->add_option("--m", table.m_spec, "m range, e.g. 3..6")->required();
  add_format(cmd_table, table.format);
  cmd_table->add_option("--output", table.output);

  HilbertOptions hilbert;
  auto* cmd_hilbert = app.add_subcommand("hilbert", "Milnor algebra Hilbert series prefix");
  cmd_hilbert->add_option("--d", hilbert.d)->required();
  cmd_hilbert->add_option("--m", hilbert.m)->required();
  cmd_hilbert->add_option("--order", hilbert.order, "truncation order (default 2dm-m-3)")
      ->check(CLI::NonNegativeNumber);
  add_format(cmd_hilbert, hilbert.format);
  cmd_hilbert->add_option("--output", hilbert.output);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (cmd_hodge->parsed()) return run_hodge(hodge);
    if (cmd_picard->parsed()) return run_picard_check(picard);
    if (cmd_seshadri->parsed()) return run_seshadri(seshadri);
    if (cmd_table->parsed()) return run_table(table);
    if (cmd_hilbert->parsed()) return run_hilbert(hilbert);
  } catch (const duple::hypothesis_error& e) {
    std::cerr << "hypothesis violation: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
