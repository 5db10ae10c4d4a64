#include "fatpoints/fatpoints.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fatpoints/cones.hpp"
#include "fatpoints/config.hpp"
#include "fatpoints/error.hpp"
#include "fatpoints/murank.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/resolution.hpp"
#include "fatpoints/weyl.hpp"

using namespace fatpoints;

struct fp_config {
  fp_config(PointConfiguration c, std::optional<PointSet> p)
      : config(std::move(c)), points(std::move(p)), type_name(config.type_name()) {}

  PointConfiguration config;
  std::optional<PointSet> points;
  std::string type_name;
};

struct fp_class_list {
  std::vector<DivisorClass> classes;
};

struct fp_resolution {
  FatPointScheme scheme;
  HilbertProfile profile;
  BettiTable table;
  std::string f0, f1;
};

struct fp_report {
  VerificationReport report;
};

namespace {

thread_local std::string last_error;

fp_status record(fp_status status, const std::string& message) {
  last_error = message;
  return status;
}

fp_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return FP_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return FP_ERR_PARSE;
    case ErrorCode::Unsupported: return FP_ERR_UNSUPPORTED;
    case ErrorCode::Overflow: return FP_ERR_OVERFLOW;
    case ErrorCode::CapExceeded: return FP_ERR_CAP_EXCEEDED;
    case ErrorCode::Internal: return FP_ERR_INTERNAL;
  }
  return FP_ERR_INTERNAL;
}

template <class Body>
fp_status guarded(Body&& body) {
  try {
    body();
    return FP_OK;
  } catch (const Error& e) {
    return record(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(FP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(FP_ERR_INTERNAL, e.what());
  }
}

#define FP_REQUIRE(ptr)                                                       \
  do {                                                                        \
    if ((ptr) == nullptr) return record(FP_ERR_NULL_ARGUMENT, #ptr " is null"); \
  } while (0)

DivisorClass load(const fp_coeff* c) {
  DivisorClass::Coefficients v{};
  for (int i = 0; i < FP_RANK; ++i) v[static_cast<std::size_t>(i)] = c[i];
  return DivisorClass(v);
}

void store(const DivisorClass& c, fp_coeff* out) {
  for (int i = 0; i < FP_RANK; ++i) out[i] = c[i];
}

Multiplicities load_mult(const fp_coeff* m) {
  Multiplicities out{};
  for (int i = 0; i < FP_POINTS; ++i) out[static_cast<std::size_t>(i)] = m[i];
  return out;
}

fp_cert_status to_cert(CertStatus s) {
  switch (s) {
    case CertStatus::Surjective: return FP_CERT_SURJECTIVE;
    case CertStatus::Injective: return FP_CERT_INJECTIVE;
    case CertStatus::MaximalRank: return FP_CERT_MAXIMAL_RANK;
    case CertStatus::Inconclusive: return FP_CERT_INCONCLUSIVE;
  }
  return FP_CERT_INCONCLUSIVE;
}

const FrameReport* frame_at(const fp_report* report, std::size_t frame) {
  if (report == nullptr || frame >= report->report.frames.size()) return nullptr;
  return &report->report.frames[frame];
}

fp_status give_list(std::vector<DivisorClass> classes, fp_class_list** out) {
  *out = new fp_class_list{std::move(classes)};
  return FP_OK;
}

}  // namespace

extern "C" {

const char* fp_last_error(void) { return last_error.c_str(); }

const char* fp_status_name(fp_status status) {
  switch (status) {
    case FP_OK: return "ok";
    case FP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case FP_ERR_PARSE: return "parse error";
    case FP_ERR_UNSUPPORTED: return "unsupported";
    case FP_ERR_OVERFLOW: return "overflow";
    case FP_ERR_CAP_EXCEEDED: return "cap exceeded";
    case FP_ERR_INTERNAL: return "internal error";
    case FP_ERR_NULL_ARGUMENT: return "null argument";
  }
  return "unknown";
}

const char* fp_cert_status_name(fp_cert_status status) {
  switch (status) {
    case FP_CERT_SURJECTIVE: return "Surjective";
    case FP_CERT_INJECTIVE: return "Injective";
    case FP_CERT_MAXIMAL_RANK: return "MaximalRank";
    case FP_CERT_INCONCLUSIVE: return "Inconclusive";
  }
  return "?";
}

fp_status fp_config_from_json(const char* json, fp_config** out) {
  FP_REQUIRE(json);
  FP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new fp_config{PointConfiguration::from_json(json), std::nullopt}; });
}

fp_status fp_config_from_file(const char* path, fp_config** out) {
  FP_REQUIRE(path);
  FP_REQUIRE(out);
  *out = nullptr;
  std::ifstream in(path);
  if (!in) return record(FP_ERR_INVALID_ARGUMENT, std::string("cannot open ") + path);
  std::ostringstream text;
  text << in.rdbuf();
  return fp_config_from_json(text.str().c_str(), out);
}

fp_status fp_config_from_case(const char* name, fp_config** out) {
  FP_REQUIRE(name);
  FP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const FixtureCase c = parse_fixture_case(name);
    *out = new fp_config{PointConfiguration(fixture_spec(c)), fixture_points(c)};
  });
}

void fp_config_free(fp_config* config) { delete config; }

const char* fp_config_type_name(const fp_config* config) {
  return config ? config->type_name.c_str() : "";
}

int fp_config_is_distinct(const fp_config* config) { return config != nullptr && config->config.is_distinct(); }
int fp_config_has_points(const fp_config* config) { return config != nullptr && config->points.has_value(); }
int fp_config_anticanonical_nef(const fp_config* config) {
  return config != nullptr && anticanonical_nef(config->config.neg());
}

size_t fp_class_list_size(const fp_class_list* list) { return list ? list->classes.size() : 0; }

fp_status fp_class_list_get(const fp_class_list* list, size_t index, fp_coeff out[FP_RANK]) {
  FP_REQUIRE(list);
  FP_REQUIRE(out);
  if (index >= list->classes.size()) return record(FP_ERR_INVALID_ARGUMENT, "class list index out of range");
  store(list->classes[index], out);
  return FP_OK;
}

void fp_class_list_free(fp_class_list* list) { delete list; }

fp_status fp_neg(const fp_config* config, fp_class_list** out) {
  FP_REQUIRE(config);
  FP_REQUIRE(out);
  return give_list(config->config.neg().classes(), out);
}

fp_status fp_nef_generators(const fp_config* config, int raw, fp_class_list** out) {
  FP_REQUIRE(config);
  FP_REQUIRE(out);
  return guarded([&] {
    GeneratorSet gens = nef_generators(config->config.neg());
    give_list(raw ? std::move(gens.raw) : std::move(gens.pared), out);
  });
}

fp_status fp_e0_classes(const fp_config* config, fp_class_list** out) {
  FP_REQUIRE(config);
  FP_REQUIRE(out);
  return guarded([&] { give_list(e0_classes(config->config.neg()), out); });
}

fp_status fp_orbit(const fp_coeff seed[FP_RANK], fp_class_list** out) {
  FP_REQUIRE(seed);
  FP_REQUIRE(out);
  return guarded([&] { give_list(orbit(load(seed)), out); });
}

fp_status fp_parse_class(const char* text, fp_coeff out[FP_RANK]) {
  FP_REQUIRE(text);
  FP_REQUIRE(out);
  return guarded([&] { store(parse_class(text), out); });
}

fp_status fp_format_class(const fp_coeff cls[FP_RANK], char* buffer, size_t size) {
  FP_REQUIRE(cls);
  FP_REQUIRE(buffer);
  const std::string row = format_row(load(cls));
  if (row.size() + 1 > size) return record(FP_ERR_INVALID_ARGUMENT, "buffer too small");
  std::memcpy(buffer, row.c_str(), row.size() + 1);
  return FP_OK;
}

fp_status fp_h0(const fp_config* config, const fp_coeff cls[FP_RANK], fp_coeff* out) {
  FP_REQUIRE(config);
  FP_REQUIRE(cls);
  FP_REQUIRE(out);
  return guarded([&] { *out = h0(load(cls), config->config.neg()); });
}

fp_status fp_is_nef(const fp_config* config, const fp_coeff cls[FP_RANK], int* out) {
  FP_REQUIRE(config);
  FP_REQUIRE(cls);
  FP_REQUIRE(out);
  *out = is_nef(load(cls), config->config.neg()) ? 1 : 0;
  return FP_OK;
}

size_t fp_catalog_size(void) { return dynkin_catalog().size(); }

const char* fp_catalog_name(size_t index) {
  const auto& cat = dynkin_catalog();
  return index < cat.size() ? cat[index].name.c_str() : nullptr;
}

fp_status fp_catalog_roots(size_t index, fp_class_list** out) {
  FP_REQUIRE(out);
  const auto& cat = dynkin_catalog();
  if (index >= cat.size()) return record(FP_ERR_INVALID_ARGUMENT, "catalog index out of range");
  return give_list(cat[index].roots, out);
}

fp_status fp_resolve(const fp_config* config, const fp_coeff mult[FP_POINTS], fp_coeff t_max,
                     fp_resolution** out) {
  FP_REQUIRE(config);
  FP_REQUIRE(mult);
  FP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    const FatPointScheme z = proximity_normalize(FatPointScheme(config->config, load_mult(mult)));
    HilbertProfile profile = hilbert(z, t_max);
    BettiTable table = betti(z, profile);
    std::string f0 = BettiTable::render(table.t), f1 = BettiTable::render(table.s);
    *out = new fp_resolution{z, std::move(profile), std::move(table), std::move(f0), std::move(f1)};
  });
}

void fp_resolution_free(fp_resolution* res) { delete res; }

void fp_resolution_multiplicities(const fp_resolution* res, fp_coeff out[FP_POINTS]) {
  if (res == nullptr || out == nullptr) return;
  for (int i = 0; i < FP_POINTS; ++i) out[i] = res->scheme.mult[static_cast<std::size_t>(i)];
}

fp_coeff fp_resolution_alpha(const fp_resolution* res) { return res ? res->profile.alpha : -1; }
fp_coeff fp_resolution_tau(const fp_resolution* res) { return res ? res->profile.tau : -1; }
fp_coeff fp_resolution_sigma(const fp_resolution* res) { return res ? res->profile.sigma : -1; }

fp_coeff fp_resolution_max_degree(const fp_resolution* res) {
  return res ? static_cast<fp_coeff>(res->profile.values.size()) - 1 : -1;
}

fp_coeff fp_resolution_hilbert(const fp_resolution* res, fp_coeff t) {
  if (res == nullptr || t >= static_cast<fp_coeff>(res->profile.values.size())) return -1;
  return res->profile.at(t);
}

fp_coeff fp_resolution_generators(const fp_resolution* res, fp_coeff t) {
  if (res == nullptr) return -1;
  const auto it = res->table.t.find(t);
  return it == res->table.t.end() ? 0 : it->second;
}

fp_coeff fp_resolution_syzygies(const fp_resolution* res, fp_coeff t) {
  if (res == nullptr) return -1;
  const auto it = res->table.s.find(t);
  return it == res->table.s.end() ? 0 : it->second;
}

const char* fp_resolution_f0(const fp_resolution* res) { return res ? res->f0.c_str() : ""; }
const char* fp_resolution_f1(const fp_resolution* res) { return res ? res->f1.c_str() : ""; }

fp_status fp_verify(const fp_config* config, int all_e0, int depth, unsigned threads, fp_report** out) {
  FP_REQUIRE(config);
  FP_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new fp_report{verify_configuration(config->config, all_e0 != 0, depth, config->points, threads)};
  });
}

void fp_report_free(fp_report* report) { delete report; }

size_t fp_report_inconclusive(const fp_report* report) { return report ? report->report.inconclusive() : 0; }
size_t fp_report_frame_count(const fp_report* report) { return report ? report->report.frames.size() : 0; }

fp_status fp_report_frame(const fp_report* report, size_t frame, fp_frame_summary* out) {
  FP_REQUIRE(out);
  const FrameReport* f = frame_at(report, frame);
  if (f == nullptr) return record(FP_ERR_INVALID_ARGUMENT, "frame index out of range");
  store(f->frame[0], out->head);
  out->raw_count = f->raw_count;
  out->pared_count = f->pared_count;
  out->gamma_count = f->gamma_count;
  out->depth = f->s_sizes.size();
  out->stabilized = f->stabilization.found;
  out->stab_j = f->stabilization.j;
  out->stab_k = f->stabilization.k;
  out->stab_failure = f->stabilization.failure.c_str();
  out->inconclusive = f->inconclusive();
  return FP_OK;
}

fp_status fp_report_chain_size(const fp_report* report, size_t frame, size_t level, size_t* out) {
  FP_REQUIRE(out);
  const FrameReport* f = frame_at(report, frame);
  if (f == nullptr || level < 1 || level > f->s_sizes.size())
    return record(FP_ERR_INVALID_ARGUMENT, "frame or level out of range");
  *out = f->s_sizes[level - 1];
  return FP_OK;
}

fp_status fp_report_frame_neg(const fp_report* report, size_t frame, fp_class_list** out) {
  FP_REQUIRE(out);
  const FrameReport* f = frame_at(report, frame);
  if (f == nullptr) return record(FP_ERR_INVALID_ARGUMENT, "frame index out of range");
  return give_list(f->neg.classes(), out);
}

size_t fp_report_entry_count(const fp_report* report, size_t frame) {
  const FrameReport* f = frame_at(report, frame);
  return f ? f->entries.size() : 0;
}

fp_status fp_report_entry(const fp_report* report, size_t frame, size_t index, fp_entry* out) {
  FP_REQUIRE(out);
  const FrameReport* f = frame_at(report, frame);
  if (f == nullptr || index >= f->entries.size()) return record(FP_ERR_INVALID_ARGUMENT, "entry index out of range");
  const CertifiedClass& e = f->entries[index];
  store(e.cls, out->cls);
  out->level = e.level;
  out->status = to_cert(e.cert.status);
  out->reason = e.cert.reason.c_str();
  out->detail = e.cert.detail.c_str();
  return FP_OK;
}

size_t fp_report_tail_count(const fp_report* report, size_t frame) {
  const FrameReport* f = frame_at(report, frame);
  return f ? f->tails.size() : 0;
}

fp_status fp_report_tail(const fp_report* report, size_t frame, size_t index, fp_tail* out) {
  FP_REQUIRE(out);
  const FrameReport* f = frame_at(report, frame);
  if (f == nullptr || index >= f->tails.size()) return record(FP_ERR_INVALID_ARGUMENT, "tail index out of range");
  const TailFamily& t = f->tails[index];
  store(t.base, out->base);
  store(t.step, out->step);
  out->offset = t.offset;
  out->covered = t.covered();
  out->rule = t.rule.c_str();
  return FP_OK;
}

fp_status fp_oracle(const fp_config* config, const fp_coeff mult[FP_POINTS], fp_coeff t, fp_oracle_result* out) {
  FP_REQUIRE(config);
  FP_REQUIRE(mult);
  FP_REQUIRE(out);
  if (!config->points) return record(FP_ERR_UNSUPPORTED, "the oracle needs explicit coordinates (use a fixture case)");
  return guarded([&] {
    const Multiplicities m = load_mult(mult);
    for (Coeff x : m)
      if (x < 0) fail(ErrorCode::InvalidArgument, "multiplicities must be nonnegative");
    if (t < 0) fail(ErrorCode::InvalidArgument, "degree must be nonnegative");
    const MuRank r = mu_rank_direct(*config->points, m, t);
    out->dim = r.source_dim / 3;
    out->dim_next = r.target_dim;
    out->rank = r.rank;
    out->ker = r.ker();
    out->cok = r.cok();
  });
}

}  // extern "C"
