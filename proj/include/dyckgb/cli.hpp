#pragma once

// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 verification failure. Machine-readable output goes to `out`,
// diagnostics to `err`.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dyckgb/apolarity.hpp"
#include "dyckgb/combinatorics.hpp"
#include "dyckgb/explicit_basis.hpp"
#include "dyckgb/groebner.hpp"
#include "dyckgb/io.hpp"
#include "dyckgb/polyring.hpp"

namespace dyckgb::cli {

enum class Method { Explicit, Loop, Buchberger };
enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::size_t n = 1;
  std::size_t n_max = 1;
  Method method = Method::Explicit;
  Format format = Format::Text;
  std::uint64_t seed = 1;
  bool trace = false;
  bool check = false;
  bool art = false;
  bool inject_fault = false;
  long k = -1;
  std::string input;
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::Explicit: return "explicit";
    case Method::Loop: return "loop";
    case Method::Buchberger: return "buchberger";
  }
  return "?";
}

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerify = 2;

/// Grid drawing of a path: '|' north, '_' east, '.' on the diagonal.
inline std::string render_path_art(const BitPath& p) {
  const std::size_t side = std::max(p.zeros_count(), p.ones()) + 1;
  std::vector<std::string> canvas(side, std::string(side, ' '));
  std::size_t x = 0;
  std::size_t y = 0;
  for (auto b : p.bits()) {
    if (b) {
      ++x;
      canvas[y][x] = '_';
    } else {
      ++y;
      canvas[y][x] = '|';
    }
  }
  for (std::size_t i = 0; i < side; ++i) {
    if (canvas[i][i] == ' ') canvas[i][i] = '.';
  }
  std::string out;
  for (std::size_t r = side; r > 0; --r) {
    auto row = canvas[r - 1];
    row.erase(row.find_last_not_of(' ') + 1);
    out += row + '\n';
  }
  return out;
}

/// Reduced basis produced by the chosen method.
inline std::vector<Polynomial> compute_basis(std::size_t n, Method m, std::ostream* trace = nullptr,
                                             BuchbergerStats* bstats = nullptr, LoopStats* lstats = nullptr) {
  switch (m) {
    case Method::Explicit: return build_family(n, final_generation(n)).basis();
    case Method::Loop: {
      LoopOptions opts;
      opts.trace = trace;
      return generation_loop(n, opts, lstats).basis();
    }
    case Method::Buchberger: {
      BuchbergerOptions opts;
      opts.trace = trace;
      const auto gens = ideal_generators(n);
      return reduce_basis(buchberger(gens, opts, bstats)).polys;
    }
  }
  return {};
}

inline bool is_in_b(const Monomial& m) {
  return m.is_square_free() && is_above_diagonal(monomial_path(m));
}

// ---------------------------------------------------------------------------

inline int cmd_gb(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ostream* trace = cfg.trace ? &err : nullptr;
  const auto basis = compute_basis(cfg.n, cfg.method, trace);
  if (cfg.check) {
    for (auto other : {Method::Explicit, Method::Loop, Method::Buchberger}) {
      if (other == cfg.method) continue;
      if (auto diff = basis_difference(basis, compute_basis(cfg.n, other))) {
        err << "method " << method_name(cfg.method) << " disagrees with " << method_name(other) << ": " << *diff
            << '\n';
        return kExitVerify;
      }
    }
  }
  if (cfg.format == Format::Json) {
    GroebnerBasis gb{cfg.n, basis, true};
    Json j = to_json(gb);
    j["method"] = method_name(cfg.method);
    out << j.dump() << '\n';
    return kExitOk;
  }
  for (const auto& p : basis) {
    out << to_text(p) << '\n';
    if (cfg.art && p.leading_monomial().is_square_free()) out << render_path_art(monomial_path(p.leading_monomial()));
  }
  return kExitOk;
}

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

inline std::vector<CheckResult> verify_one(std::size_t n, std::uint64_t seed, bool inject_fault) {
  std::vector<CheckResult> checks;
  auto run = [&](std::string name, auto&& body) {
    CheckResult r{std::move(name), true, ""};
    try {
      if (auto msg = body()) {
        r.ok = false;
        r.detail = *msg;
      }
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = e.what();
    }
    checks.push_back(std::move(r));
  };
  using Msg = std::optional<std::string>;

  auto fam = build_family(n, final_generation(n));
  if (inject_fault) {
    for (auto& [alpha, g] : fam.members) {
      if (g.size() < 2) continue;
      auto terms = g.terms();
      terms[1].coeff += 1;
      g = Polynomial::from_sorted(n, std::move(terms));
      break;
    }
  }
  const auto explicit_basis = fam.basis();

  run("explicit=loop", [&]() -> Msg { return basis_difference(explicit_basis, generation_loop(n).basis()); });
  run("explicit=buchberger", [&]() -> Msg {
    return basis_difference(explicit_basis, compute_basis(n, Method::Buchberger));
  });
  run("reduced", [&]() -> Msg {
    GroebnerBasis gb{n, explicit_basis, false};
    if (!is_reduced_basis(gb)) return "explicit family is not inter-reduced";
    return std::nullopt;
  });
  run("hilbert", [&]() -> Msg {
    const auto h = hilbert_series(build_family(n, final_generation(n)).as_groebner_basis());
    if (h.size() != n / 2 + 1) return "Hilbert series has degree " + std::to_string(h.size() - 1);
    for (std::size_t k = 0; k < h.size(); ++k) {
      mpz_class ballot = 0;
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), n, k);
      ballot = c;
      if (k > 0) {
        mpz_bin_uiui(c.get_mpz_t(), n, k - 1);
        ballot -= c;
      }
      if (h[k] != enumerate_syt_two_rows(n, k).size() || mpz_class(static_cast<unsigned long>(h[k])) != ballot) {
        return "coefficient of q^" + std::to_string(k) + " is " + std::to_string(h[k]);
      }
    }
    return std::nullopt;
  });
  run("specht", [&]() -> Msg {
    const auto bp = bprime_basis(n);
    for (const auto& sp : bp) {
      if (!in_orthogonal_complement(sp.poly)) return "G_T=" + to_text(sp.poly) + " is not in H";
      if (monomial_path(sp.poly.trailing_term().mono) != tableau_to_path(sp.tableau)) {
        return "trailing monomial of G_T=" + to_text(sp.poly) + " is not y^T";
      }
    }
    const auto b = standard_monomials(build_family(n, final_generation(n)).as_groebner_basis(),
                                      static_cast<unsigned>(n));
    if (b.size() != bp.size()) return "|B'|=" + std::to_string(bp.size()) + " but |B|=" + std::to_string(b.size());
    return std::nullopt;
  });
  run("closure", [&]() -> Msg {
    auto r = verify_group_action_closure(n, 20, seed + n);
    if (!r) return r.failure;
    return std::nullopt;
  });
  return checks;
}

inline std::size_t terminal_columns() {
  if (const char* c = std::getenv("COLUMNS")) {
    try {
      const long v = std::stol(c);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 80;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<std::future<std::vector<CheckResult>>> jobs;
  for (std::size_t n = cfg.n; n <= cfg.n_max; ++n) {
    jobs.push_back(std::async(std::launch::async, [n, &cfg] { return verify_one(n, cfg.seed, cfg.inject_fault); }));
  }
  std::vector<std::vector<CheckResult>> results;
  for (auto& j : jobs) results.push_back(j.get());

  bool all_ok = true;
  if (cfg.format == Format::Json) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < results.size(); ++i) {
      Json row = {{"n", cfg.n + i}};
      for (const auto& c : results[i]) {
        row[c.name] = c.ok ? "PASS" : "FAIL";
        all_ok = all_ok && c.ok;
        if (!c.ok) row["details"][c.name] = c.detail;
      }
      rows.push_back(std::move(row));
    }
    out << rows.dump() << '\n';
    return all_ok ? kExitOk : kExitVerify;
  }

  std::ostringstream table;
  std::vector<std::size_t> widths;
  table << std::left << std::setw(4) << "n";
  if (!results.empty()) {
    for (const auto& c : results.front()) {
      widths.push_back(std::max<std::size_t>(c.name.size(), 4) + 2);
      table << std::setw(static_cast<int>(widths.back())) << c.name;
    }
  }
  std::string header = table.str();
  header.erase(header.find_last_not_of(' ') + 1);
  out << header << '\n' << std::string(std::min(header.size(), terminal_columns()), '-') << '\n';
  std::vector<std::string> failures;
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::ostringstream row;
    row << std::left << std::setw(4) << cfg.n + i;
    for (std::size_t c = 0; c < results[i].size(); ++c) {
      const auto& r = results[i][c];
      row << std::setw(static_cast<int>(widths[c])) << (r.ok ? "PASS" : "FAIL");
      if (!r.ok) {
        all_ok = false;
        failures.push_back("n=" + std::to_string(cfg.n + i) + " " + r.name + ": " + r.detail);
      }
    }
    std::string line = row.str();
    line.erase(line.find_last_not_of(' ') + 1);
    out << line << '\n';
  }
  for (const auto& f : failures) out << "FAIL " << f << '\n';
  out << (all_ok ? "ALL PASS" : "VERIFICATION FAILED") << '\n';
  if (!all_ok) err << failures.size() << " check(s) failed\n";
  return all_ok ? kExitOk : kExitVerify;
}

inline int cmd_hilbert(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  GroebnerBasis gb{cfg.n, compute_basis(cfg.n, cfg.method), true};
  const auto h = hilbert_series(gb);
  if (cfg.format == Format::Json) {
    out << Json{{"n", cfg.n}, {"coefficients", h}}.dump() << '\n';
    return kExitOk;
  }
  for (std::size_t k = 0; k < h.size(); ++k) out << (k ? " " : "") << h[k];
  out << '\n';
  return kExitOk;
}

inline int cmd_normal_form(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Monomial m;
  const bool bitstring = !cfg.input.empty() && cfg.input.find_first_not_of("01") == std::string::npos;
  try {
    if (bitstring) {
      if (cfg.input.size() != cfg.n) {
        err << "bitstring length " << cfg.input.size() << " does not match --n " << cfg.n << '\n';
        return kExitUsage;
      }
      m = path_monomial(BitPath::parse(cfg.input));
    } else {
      m = parse_monomial(cfg.input, cfg.n);
    }
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  const auto gb = build_family(cfg.n, final_generation(cfg.n)).as_groebner_basis();
  const auto nf = normal_form(Polynomial::monomial(m), gb);
  for (const auto& t : nf.terms()) {
    if (!is_in_b(t.mono)) {
      err << "normal form contains " << to_text(t.mono) << " outside B\n";
      return kExitVerify;
    }
  }
  if (cfg.format == Format::Json) {
    out << to_json(nf).dump() << '\n';
  } else {
    out << to_text(nf) << '\n';
  }
  return kExitOk;
}

inline int cmd_specht(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.k >= 0 && 2 * static_cast<std::size_t>(cfg.k) > cfg.n) {
    err << "--k must be at most floor(n/2)\n";
    return kExitUsage;
  }
  Json rows = Json::array();
  for (const auto& sp : bprime_basis(cfg.n)) {
    if (cfg.k >= 0 && sp.tableau.k() != static_cast<std::size_t>(cfg.k)) continue;
    if (cfg.format == Format::Json) {
      rows.push_back({{"tableau", to_json(sp.tableau)}, {"poly", to_json(sp.poly)}});
    } else {
      out << to_json(sp.tableau).dump() << "  " << to_text(sp.poly) << '\n';
    }
  }
  if (cfg.format == Format::Json) out << rows.dump() << '\n';
  return kExitOk;
}

inline int cmd_summary(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const auto s = graded_summary(cfg.n);
  if (cfg.format == Format::Json) {
    out << to_json(s).dump() << '\n';
  } else {
    out << to_text(s) << '\n';
  }
  return kExitOk;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  out << "n,method,wall_ms,pairs,basis_size\n";
  for (std::size_t n = cfg.n; n <= cfg.n_max; ++n) {
    for (auto m : {Method::Explicit, Method::Loop, Method::Buchberger}) {
      BuchbergerStats bs;
      LoopStats ls;
      const auto t0 = std::chrono::steady_clock::now();
      const auto basis = compute_basis(n, m, nullptr, &bs, &ls);
      const auto t1 = std::chrono::steady_clock::now();
      const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::size_t pairs = 0;
      if (m == Method::Loop) pairs = ls.phi_columns();
      if (m == Method::Buchberger) pairs = bs.pairs_processed;
      out << n << ',' << method_name(m) << ',' << std::fixed << std::setprecision(3) << ms << ',' << pairs << ','
          << basis.size() << '\n';
    }
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Groebner basis of <y1+...+yn, y1^2, ..., yn^2> and its quotient", "dyckgb"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string method = "explicit";
  std::string format = "text";

  auto add_n = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--n", cfg.n, "number of variables")->check(CLI::Range(1, 64));
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "construction method")
        ->check(CLI::IsMember({"explicit", "loop", "buchberger"}));
  };

  auto* gb = app.add_subcommand("gb", "print the reduced lex Groebner basis");
  add_n(gb, true);
  add_method(gb);
  add_format(gb);
  gb->add_flag("--trace", cfg.trace, "log pairs or generations to stderr");
  gb->add_flag("--check", cfg.check, "compare against the other two methods");
  gb->add_flag("--art", cfg.art, "draw the leading path of each member");

  auto* verify = app.add_subcommand("verify", "cross-check all constructions for n = 1..n-max");
  verify->add_option("--n-max", cfg.n_max, "largest n")->required()->check(CLI::Range(1, 64));
  verify->add_option("--n-min", cfg.n, "smallest n")->check(CLI::Range(1, 64));
  verify->add_option("--seed", cfg.seed, "seed for randomized checks");
  verify->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_format(verify);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series coefficients of R/I");
  add_n(hilbert, true);
  add_method(hilbert);
  add_format(hilbert);

  auto* nf = app.add_subcommand("normal-form", "reduce a monomial or bitstring modulo I");
  add_n(nf, true);
  nf->add_option("input", cfg.input, "bitstring such as 110000 or monomial such as y1^2*y3")->required();
  add_format(nf);

  auto* specht_cmd = app.add_subcommand("specht", "Specht polynomials of two-row tableaux");
  add_n(specht_cmd, true);
  specht_cmd->add_option("--k", cfg.k, "second-row length");
  add_format(specht_cmd);

  auto* summary = app.add_subcommand("summary", "graded Frobenius characteristic of R/I");
  add_n(summary, true);
  add_format(summary);

  auto* bench = app.add_subcommand("bench", "time the three constructions");
  add_n(bench, false);
  bench->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::Range(1, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  cfg.format = format == "json" ? Format::Json : Format::Text;
  cfg.method = method == "loop" ? Method::Loop : method == "buchberger" ? Method::Buchberger : Method::Explicit;
  if (cfg.n_max < cfg.n) cfg.n_max = cfg.n;

  try {
    if (gb->parsed()) return cmd_gb(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out, err);
    if (hilbert->parsed()) return cmd_hilbert(cfg, out, err);
    if (nf->parsed()) return cmd_normal_form(cfg, out, err);
    if (specht_cmd->parsed()) return cmd_specht(cfg, out, err);
    if (summary->parsed()) return cmd_summary(cfg, out, err);
    if (bench->parsed()) return cmd_bench(cfg, out, err);
  } catch (const VerificationError& e) {
    err << "verification failure: " << e.what() << '\n';
    return kExitVerify;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dyckgb::cli
