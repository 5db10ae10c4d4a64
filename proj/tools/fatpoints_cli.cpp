// Command-line front end over the C API.
//
// Exit codes: 0 success, 1 invalid input or library error, 2 verification
// left something inconclusive (or the oracle disagreed with the pipeline).

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpoints/fatpoints.h"

namespace {

using nlohmann::json;
using Row = std::vector<fp_coeff>;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitInconclusive = 2;

struct Failure {
  std::string message;
};

void check(fp_status status) {
  if (status != FP_OK) throw Failure{std::string(fp_status_name(status)) + ": " + fp_last_error()};
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using ConfigPtr = std::unique_ptr<fp_config, Deleter<fp_config, fp_config_free>>;
using ListPtr = std::unique_ptr<fp_class_list, Deleter<fp_class_list, fp_class_list_free>>;
using ResolutionPtr = std::unique_ptr<fp_resolution, Deleter<fp_resolution, fp_resolution_free>>;
using ReportPtr = std::unique_ptr<fp_report, Deleter<fp_report, fp_report_free>>;

std::string format(const fp_coeff* c) {
  char buf[256];
  check(fp_format_class(c, buf, sizeof buf));
  return buf;
}

std::vector<Row> rows_of(const fp_class_list* list) {
  std::vector<Row> out;
  for (size_t i = 0; i < fp_class_list_size(list); ++i) {
    Row r(FP_RANK);
    check(fp_class_list_get(list, i, r.data()));
    out.push_back(std::move(r));
  }
  return out;
}

struct Options {
  std::string config_path;
  std::string case_name;
  std::string mult_text;
  fp_coeff degree = -1;
  bool json_output = false;
  bool all_e0 = false;
  int depth = 6;
  unsigned threads = 0;
  bool raw = false;
  bool compare = false;
  std::string class_text;
};

ConfigPtr load_config(const Options& o) {
  fp_config* raw = nullptr;
  if (!o.config_path.empty() && !o.case_name.empty()) throw Failure{"give either --config or --case, not both"};
  if (!o.case_name.empty())
    check(fp_config_from_case(o.case_name.c_str(), &raw));
  else if (!o.config_path.empty())
    check(fp_config_from_file(o.config_path.c_str(), &raw));
  else
    throw Failure{"a configuration is required (--config <path> or --case <name>)"};
  return ConfigPtr(raw);
}

std::vector<fp_coeff> parse_mult(const std::string& text) {
  if (text.empty()) throw Failure{"--mult m1,...,m6 is required"};
  std::vector<fp_coeff> m;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      m.push_back(v);
    } catch (const std::exception&) {
      throw Failure{"bad multiplicity '" + item + "'"};
    }
  }
  if (m.size() != FP_POINTS) throw Failure{"--mult needs exactly 6 comma-separated values"};
  return m;
}

void emit_rows(const std::vector<Row>& rows, const Options& o, const std::string& key) {
  if (o.json_output) {
    json doc;
    doc[key] = rows;
    doc["count"] = rows.size();
    std::cout << doc.dump(2) << "\n";
    return;
  }
  for (const auto& r : rows) std::cout << format(r.data()) << "\n";
}

int cmd_neg(const Options& o) {
  auto cfg = load_config(o);
  fp_class_list* list = nullptr;
  check(fp_neg(cfg.get(), &list));
  ListPtr keep(list);
  emit_rows(rows_of(list), o, "neg");
  return kExitOk;
}

int cmd_nefgens(const Options& o) {
  auto cfg = load_config(o);
  fp_class_list* list = nullptr;
  check(fp_nef_generators(cfg.get(), o.raw ? 1 : 0, &list));
  ListPtr keep(list);
  emit_rows(rows_of(list), o, o.raw ? "raw" : "generators");
  return kExitOk;
}

int cmd_orbit(const Options& o) {
  Row seed(FP_RANK);
  check(fp_parse_class(o.class_text.c_str(), seed.data()));
  fp_class_list* list = nullptr;
  check(fp_orbit(seed.data(), &list));
  ListPtr keep(list);
  emit_rows(rows_of(list), o, "orbit");
  return kExitOk;
}

int cmd_catalog(const Options& o) {
  json doc = json::array();
  for (size_t i = 0; i < fp_catalog_size(); ++i) {
    fp_class_list* list = nullptr;
    check(fp_catalog_roots(i, &list));
    ListPtr keep(list);
    const auto roots = rows_of(list);
    if (o.json_output) {
      doc.push_back({{"type", fp_catalog_name(i)}, {"roots", roots}});
      continue;
    }
    std::string line = fp_catalog_name(i);
    line.resize(std::max<std::size_t>(line.size(), 7), ' ');
    for (std::size_t k = 0; k < roots.size(); ++k) line += (k ? " | " : "") + format(roots[k].data());
    std::cout << line << "\n";
  }
  if (o.json_output) std::cout << doc.dump(2) << "\n";
  return kExitOk;
}

ResolutionPtr resolve(const fp_config* cfg, const std::vector<fp_coeff>& m, fp_coeff t_max) {
  fp_resolution* res = nullptr;
  check(fp_resolve(cfg, m.data(), std::max<fp_coeff>(t_max, 0), &res));
  return ResolutionPtr(res);
}

fp_coeff shown_top(const fp_resolution* res, const Options& o) {
  return o.degree >= 0 ? o.degree : fp_resolution_sigma(res) + 2;
}

json profile_json(const fp_resolution* res) {
  std::vector<fp_coeff> mult(FP_POINTS);
  fp_resolution_multiplicities(res, mult.data());
  return {{"multiplicities", mult},
          {"alpha", fp_resolution_alpha(res)},
          {"tau", fp_resolution_tau(res)},
          {"sigma", fp_resolution_sigma(res)}};
}

int cmd_hilbert(const Options& o) {
  auto cfg = load_config(o);
  auto res = resolve(cfg.get(), parse_mult(o.mult_text), o.degree);
  const fp_coeff top = shown_top(res.get(), o);
  if (o.json_output) {
    json doc = profile_json(res.get());
    std::vector<fp_coeff> h;
    for (fp_coeff t = 0; t <= top; ++t) h.push_back(fp_resolution_hilbert(res.get(), t));
    doc["hilbert"] = h;
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::printf("%6s %8s\n", "degree", "h_Z");
  for (fp_coeff t = 0; t <= top; ++t)
    std::printf("%6lld %8lld\n", static_cast<long long>(t), static_cast<long long>(fp_resolution_hilbert(res.get(), t)));
  std::printf("alpha=%lld tau=%lld sigma=%lld\n", static_cast<long long>(fp_resolution_alpha(res.get())),
              static_cast<long long>(fp_resolution_tau(res.get())),
              static_cast<long long>(fp_resolution_sigma(res.get())));
  return kExitOk;
}

int cmd_resolve(const Options& o) {
  auto cfg = load_config(o);
  auto res = resolve(cfg.get(), parse_mult(o.mult_text), o.degree);
  const fp_coeff top = std::max(shown_top(res.get(), o), fp_resolution_sigma(res.get()) + 2);
  if (o.json_output) {
    json doc = profile_json(res.get());
    json rows = json::array();
    for (fp_coeff t = 0; t <= top; ++t)
      rows.push_back({{"degree", t},
                      {"h", fp_resolution_hilbert(res.get(), t)},
                      {"t", fp_resolution_generators(res.get(), t)},
                      {"s", fp_resolution_syzygies(res.get(), t)}});
    doc["table"] = rows;
    doc["F0"] = fp_resolution_f0(res.get());
    doc["F1"] = fp_resolution_f1(res.get());
    std::cout << doc.dump(2) << "\n";
    return kExitOk;
  }
  std::printf("%6s %8s %6s %6s\n", "degree", "h_Z", "t", "s");
  for (fp_coeff t = 0; t <= top; ++t)
    std::printf("%6lld %8lld %6lld %6lld\n", static_cast<long long>(t),
                static_cast<long long>(fp_resolution_hilbert(res.get(), t)),
                static_cast<long long>(fp_resolution_generators(res.get(), t)),
                static_cast<long long>(fp_resolution_syzygies(res.get(), t)));
  std::printf("F0 = %s\nF1 = %s\n", fp_resolution_f0(res.get()), fp_resolution_f1(res.get()));
  return kExitOk;
}

int cmd_verify(const Options& o) {
  auto cfg = load_config(o);
  fp_report* raw = nullptr;
  check(fp_verify(cfg.get(), o.all_e0, o.depth, o.threads, &raw));
  ReportPtr report(raw);
  json doc;
  doc["type"] = fp_config_type_name(cfg.get());
  doc["frames"] = json::array();
  for (size_t f = 0; f < fp_report_frame_count(raw); ++f) {
    fp_frame_summary s{};
    check(fp_report_frame(raw, f, &s));
    std::vector<size_t> sizes;
    for (size_t level = 1; level <= s.depth; ++level) {
      size_t n = 0;
      check(fp_report_chain_size(raw, f, level, &n));
      sizes.push_back(n);
    }
    json frame = {{"line_class", std::vector<fp_coeff>(s.head, s.head + FP_RANK)},
                  {"raw", s.raw_count},
                  {"pared", s.pared_count},
                  {"gamma", s.gamma_count},
                  {"chain_sizes", sizes},
                  {"stabilized", static_cast<bool>(s.stabilized)},
                  {"inconclusive", s.inconclusive}};
    if (s.stabilized) frame["stabilization"] = {{"j", s.stab_j}, {"k", s.stab_k}};
    else frame["stabilization_failure"] = s.stab_failure;

    if (!o.json_output) {
      std::cout << "frame " << f << ": line class " << format(s.head) << "\n";
      std::cout << "  generators raw=" << s.raw_count << " pared=" << s.pared_count << " gamma=" << s.gamma_count
                << "\n  chain sizes:";
      for (auto n : sizes) std::cout << " " << n;
      std::cout << "\n  stabilization: ";
      if (s.stabilized) std::cout << "j=" << s.stab_j << " k=" << s.stab_k << "\n";
      else std::cout << "not found (" << s.stab_failure << ")\n";
    }
    json entries = json::array();
    for (size_t i = 0; i < fp_report_entry_count(raw, f); ++i) {
      fp_entry e{};
      check(fp_report_entry(raw, f, i, &e));
      if (o.json_output) {
        entries.push_back({{"class", std::vector<fp_coeff>(e.cls, e.cls + FP_RANK)},
                           {"level", e.level},
                           {"status", fp_cert_status_name(e.status)},
                           {"reason", e.reason},
                           {"detail", e.detail}});
        continue;
      }
      std::printf("  L%d  %-28s %-12s %s%s%s\n", e.level, format(e.cls).c_str(), fp_cert_status_name(e.status),
                  e.reason, *e.detail ? "  " : "", e.detail);
    }
    json tails = json::array();
    for (size_t i = 0; i < fp_report_tail_count(raw, f); ++i) {
      fp_tail t{};
      check(fp_report_tail(raw, f, i, &t));
      if (o.json_output) {
        tails.push_back({{"base", std::vector<fp_coeff>(t.base, t.base + FP_RANK)},
                         {"step", std::vector<fp_coeff>(t.step, t.step + FP_RANK)},
                         {"offset", t.offset},
                         {"rule", t.covered ? t.rule : nullptr}});
        continue;
      }
      std::printf("  tail %-28s + i*(%s): %s\n", format(t.base).c_str(), format(t.step).c_str(),
                  t.covered ? t.rule : "UNCOVERED");
    }
    frame["entries"] = std::move(entries);
    frame["tails"] = std::move(tails);
    doc["frames"].push_back(std::move(frame));
  }
  const size_t inconclusive = fp_report_inconclusive(raw);
  doc["inconclusive"] = inconclusive;
  if (o.json_output) std::cout << doc.dump(2) << "\n";
  else std::cout << "inconclusive: " << inconclusive << "\n";
  return inconclusive == 0 ? kExitOk : kExitInconclusive;
}

int cmd_oracle(const Options& o) {
  if (o.case_name.empty()) throw Failure{"oracle needs --case (i, ii, iii, iv, general, conic)"};
  if (!o.compare && o.degree < 0) throw Failure{"oracle needs --deg <t>"};
  auto cfg = load_config(o);
  const auto m = parse_mult(o.mult_text);
  if (!o.compare) {
    fp_oracle_result r{};
    check(fp_oracle(cfg.get(), m.data(), o.degree, &r));
    if (o.json_output) {
      std::cout << json{{"degree", o.degree}, {"dim", r.dim}, {"dim_next", r.dim_next},
                        {"rank", r.rank}, {"ker", r.ker}, {"cok", r.cok}}.dump(2)
                << "\n";
    } else {
      std::printf("dim I_%lld = %lld\ndim I_%lld = %lld\nrank = %lld\nker = %lld\ncok = %lld\n",
                  static_cast<long long>(o.degree), static_cast<long long>(r.dim),
                  static_cast<long long>(o.degree + 1), static_cast<long long>(r.dim_next),
                  static_cast<long long>(r.rank), static_cast<long long>(r.ker), static_cast<long long>(r.cok));
    }
    return kExitOk;
  }

  // Predicted cok of mu in degree i is the generator count in degree i+1.
  auto res = resolve(cfg.get(), m, o.degree);
  const fp_coeff top = std::max(o.degree, fp_resolution_sigma(res.get()) + 1);
  std::size_t mismatches = 0;
  json rows = json::array();
  if (!o.json_output) std::printf("%6s %10s %10s %10s %10s\n", "degree", "h(pipe)", "h(oracle)", "cok(pipe)", "cok(oracle)");
  for (fp_coeff t = 0; t <= top; ++t) {
    fp_oracle_result r{};
    check(fp_oracle(cfg.get(), m.data(), t, &r));
    const fp_coeff h = fp_resolution_hilbert(res.get(), t);
    const fp_coeff cok = fp_resolution_generators(res.get(), t + 1);
    const bool ok = h == r.dim && cok == r.cok;
    if (!ok) ++mismatches;
    if (o.json_output) {
      rows.push_back({{"degree", t}, {"h", h}, {"oracle_h", r.dim}, {"cok", cok}, {"oracle_cok", r.cok}, {"match", ok}});
    } else {
      std::printf("%6lld %10lld %10lld %10lld %10lld%s\n", static_cast<long long>(t), static_cast<long long>(h),
                  static_cast<long long>(r.dim), static_cast<long long>(cok), static_cast<long long>(r.cok),
                  ok ? "" : "  MISMATCH");
    }
  }
  if (o.json_output) std::cout << json{{"rows", rows}, {"mismatches", mismatches}}.dump(2) << "\n";
  else std::printf("mismatches: %zu\n", mismatches);
  return mismatches == 0 ? kExitOk : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert functions, Betti numbers and maximal-rank checks for fat points on six points of the plane"};
  app.require_subcommand(1);
  Options o;

  auto add_config = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "configuration JSON file");
    sub->add_option("--case", o.case_name, "fixture point set: i, ii, iii, iv, general, conic");
  };
  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", o.json_output, "JSON output"); };

  auto* neg = app.add_subcommand("neg", "negative curves of the configuration");
  add_config(neg);
  add_json(neg);
  auto* nefgens = app.add_subcommand("nefgens", "generators of the nef cone");
  add_config(nefgens);
  add_json(nefgens);
  nefgens->add_flag("--raw", o.raw, "list before removing sums");
  auto* orbit = app.add_subcommand("orbit", "Weyl group orbit of a class");
  orbit->add_option("class", o.class_text, "seven integers, e.g. \"1 0 0 0 0 0 0\"")->required();
  add_json(orbit);
  auto* catalog = app.add_subcommand("catalog", "the 20 configuration types and their (-2)-curves");
  add_json(catalog);
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert function of a fat point scheme");
  auto* resolve_cmd = app.add_subcommand("resolve", "graded Betti numbers of a fat point scheme");
  for (auto* sub : {hilbert, resolve_cmd}) {
    add_config(sub);
    add_json(sub);
    sub->add_option("--mult", o.mult_text, "multiplicities m1,...,m6")->required();
    sub->add_option("--deg", o.degree, "show degrees up to this value");
  }
  auto* verify = app.add_subcommand("verify", "certify maximal rank for every class the argument needs");
  add_config(verify);
  add_json(verify);
  verify->add_flag("--all-e0", o.all_e0, "check every choice of line class");
  verify->add_option("--depth", o.depth, "chain depth")->check(CLI::Range(2, 12));
  verify->add_option("--threads", o.threads, "worker threads (0 = all cores)");
  auto* oracle = app.add_subcommand("oracle", "rank computations from explicit coordinates");
  oracle->add_option("--case", o.case_name, "fixture point set")->required();
  oracle->add_option("--mult", o.mult_text, "multiplicities m1,...,m6")->required();
  oracle->add_option("--deg", o.degree, "degree t");
  oracle->add_flag("--compare", o.compare, "compare against the pipeline up to sigma + 1");
  add_json(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*neg) return cmd_neg(o);
    if (*nefgens) return cmd_nefgens(o);
    if (*orbit) return cmd_orbit(o);
    if (*catalog) return cmd_catalog(o);
    if (*hilbert) return cmd_hilbert(o);
    if (*resolve_cmd) return cmd_resolve(o);
    if (*verify) return cmd_verify(o);
    if (*oracle) return cmd_oracle(o);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}
