// extern-C surface. Wraps the core behind opaque handles and maps core
// exceptions onto status codes + caller-owned message strings.
#include "tgs/tgs.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "core/axioms.hpp"
#include "core/claims.hpp"
#include "core/codes.hpp"
#include "core/common.hpp"
#include "core/decoder.hpp"
#include "core/fixtures.hpp"
#include "core/ideals.hpp"
#include "core/jsonutil.hpp"
#include "core/quotient.hpp"
#include "core/structure.hpp"

using nlohmann::json;

struct tgs_structure {
  tgs::Structure value;
};

struct tgs_code {
  tgs::Code value;
  std::optional<tgs::CosetTable> cosets;  // built on demand
  tgs::Bounds bounds;                      // bounds the code was built under
};

namespace {

char* dup_string(const std::string& s) {
  char* out = new (std::nothrow) char[s.size() + 1];
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error) *error = dup_string(message);
}

tgs_status status_of(tgs::ErrorKind kind) {
  switch (kind) {
    case tgs::ErrorKind::Parse: return TGS_ERR_PARSE;
    case tgs::ErrorKind::Usage: return TGS_ERR_USAGE;
    case tgs::ErrorKind::Bounds: return TGS_ERR_BOUNDS;
    case tgs::ErrorKind::InvalidStructure: return TGS_ERR_INVALID_STRUCTURE;
    case tgs::ErrorKind::NotFound: return TGS_ERR_NOT_FOUND;
    case tgs::ErrorKind::Internal: return TGS_ERR_INTERNAL;
  }
  return TGS_ERR_INTERNAL;
}

// Runs `fn` and routes exceptions into (status, error message).
template <typename Fn>
tgs_status guarded(char** error, Fn&& fn) {
  try {
    fn();
    return TGS_OK;
  } catch (const tgs::Error& e) {
    set_error(error, e.what());
    return status_of(e.kind());
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return TGS_ERR_INTERNAL;
  } catch (...) {
    set_error(error, "unknown error");
    return TGS_ERR_INTERNAL;
  }
}

tgs::Bounds bounds_of(const char* spec) {
  return tgs::parse_bounds(spec ? std::string(spec) : std::string());
}

void require_usable(const tgs::Structure& t, int force) {
  if (!t.is_valid() && !force)
    throw tgs::Error(tgs::ErrorKind::InvalidStructure,
                     "structure fails the axiom check; pass force to proceed "
                     "diagnostically");
}

json parse_json_arg(const char* text, const char* what) {
  if (!text) throw tgs::Error(tgs::ErrorKind::Usage, std::string(what) + " is null");
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded())
    throw tgs::Error(tgs::ErrorKind::Parse, std::string(what) + " is not valid JSON");
  return doc;
}

void emit(char** out, const json& doc) { *out = dup_string(tgs::dump_canonical(doc)); }

const tgs::CosetTable& cosets_of(const tgs_code* c) {
  auto* mutable_handle = const_cast<tgs_code*>(c);
  if (!mutable_handle->cosets)
    mutable_handle->cosets = tgs::build_coset_table(c->value, c->bounds);
  return *mutable_handle->cosets;
}

}  // namespace

extern "C" {

const char* tgs_version(void) { return tgs::kLibraryVersion; }

const char* tgs_status_name(tgs_status status) {
  switch (status) {
    case TGS_OK: return "ok";
    case TGS_ERR_PARSE: return "parse";
    case TGS_ERR_USAGE: return "usage";
    case TGS_ERR_BOUNDS: return "bounds";
    case TGS_ERR_INVALID_STRUCTURE: return "invalid-structure";
    case TGS_ERR_NOT_FOUND: return "not-found";
    case TGS_ERR_INTERNAL: return "internal";
  }
  return "internal";
}

void tgs_string_free(char* str) { delete[] str; }

tgs_status tgs_structure_parse(const char* document_json, tgs_structure** out,
                               char** error) {
  if (!out) return TGS_ERR_USAGE;
  *out = nullptr;
  return guarded(error, [&] {
    if (!document_json)
      throw tgs::Error(tgs::ErrorKind::Usage, "document is null");
    auto handle = new tgs_structure{tgs::Structure::from_json_text(document_json)};
    *out = handle;
  });
}

void tgs_structure_free(tgs_structure* s) { delete s; }

tgs_status tgs_structure_to_json(const tgs_structure* s, char** out) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(nullptr, [&] { *out = dup_string(s->value.to_json_text()); });
}

int tgs_structure_is_valid(const tgs_structure* s) {
  return s && s->value.is_valid() ? 1 : 0;
}

tgs_status tgs_structure_eval(const tgs_structure* s, const char* op,
                              const char* args_csv, char** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    if (!op || !args_csv) throw tgs::Error(tgs::ErrorKind::Usage, "op/args are null");
    const tgs::Structure& t = s->value;
    const std::string name = op;
    json doc;
    doc["op"] = name;
    auto elems = [&](const std::string& csv) { return tgs::parse_labels_csv(t, csv); };
    if (name == "plus") {
      const auto a = elems(args_csv);
      if (a.size() != 2) throw tgs::Error(tgs::ErrorKind::Usage, "plus takes two elements");
      doc["args"] = tgs::to_labels(t, a);
      doc["value"] = t.label(t.plus(a[0], a[1]));
    } else if (name == "ternary") {
      const auto a = elems(args_csv);
      if (a.size() != 3)
        throw tgs::Error(tgs::ErrorKind::Usage, "ternary takes three elements");
      doc["args"] = tgs::to_labels(t, a);
      doc["value"] = t.label(t.ternary(a[0], a[1], a[2]));
    } else if (name == "leq") {
      const auto a = elems(args_csv);
      if (a.size() != 2) throw tgs::Error(tgs::ErrorKind::Usage, "leq takes two elements");
      doc["args"] = tgs::to_labels(t, a);
      doc["value"] = t.leq(a[0], a[1]);
    } else if (name == "gamma") {
      const std::string csv = args_csv;
      const auto comma = csv.find(',');
      if (comma == std::string::npos)
        throw tgs::Error(tgs::ErrorKind::Usage, "gamma takes a gamma label and an element");
      const std::size_t g = t.require_gamma(csv.substr(0, comma));
      const auto a = elems(csv.substr(comma + 1));
      if (a.size() != 1) throw tgs::Error(tgs::ErrorKind::Usage, "gamma takes one element");
      doc["args"] = json::array({t.gamma_label(g), t.label(a[0])});
      doc["value"] = t.label(t.gamma(g, a[0]));
    } else {
      throw tgs::Error(tgs::ErrorKind::Usage, "unknown operation '" + name + "'");
    }
    emit(out, doc);
  });
}

tgs_status tgs_structure_check(const tgs_structure* s, const char* bounds,
                               char** report_json, char** error) {
  if (!s || !report_json) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    const tgs::Bounds b = bounds_of(bounds);
    const auto report = tgs::check_axioms(s->value, b.witness_cap);
    emit(report_json, tgs::axiom_report_to_json(s->value, report));
  });
}

tgs_status tgs_structure_test_ideal(const tgs_structure* s, const char* labels_csv,
                                    int literal, char** verdict_json, char** error) {
  if (!s || !verdict_json) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    if (!labels_csv) throw tgs::Error(tgs::ErrorKind::Usage, "label list is null");
    const auto elems = tgs::parse_labels_csv(s->value, labels_csv);
    const tgs::ElemMask mask = tgs::mask_of(elems);
    const auto check = tgs::is_k_ideal(s->value, mask, literal != 0);
    json doc = tgs::ideal_check_to_json(s->value, mask, check);
    doc["mode"] = literal ? "literal" : "strict";
    emit(verdict_json, doc);
  });
}

tgs_status tgs_structure_ideals(const tgs_structure* s, int literal, const char* bounds,
                                int force, char** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    require_usable(s->value, force);
    const tgs::Bounds b = bounds_of(bounds);
    const auto ideals = tgs::enumerate_k_ideals(s->value, literal != 0, b);
    json doc;
    doc["mode"] = literal ? "literal" : "strict";
    doc["count"] = ideals.size();
    json list = json::array();
    for (std::size_t i = 0; i < ideals.size(); ++i) {
      json node;
      node["index"] = i;
      node["labels"] = tgs::mask_to_labels(s->value, ideals[i]);
      node["size"] = tgs::popcount(ideals[i]);
      node["minimal_nonzero"] =
          tgs::mask_to_labels(s->value, tgs::minimal_nonzero_elements(s->value, ideals[i]));
      const auto prime = tgs::is_prime(s->value, ideals[i]);
      const auto semi = tgs::is_semiprime(s->value, ideals[i]);
      auto prime_json = [&](const tgs::PrimeResult& r) -> json {
        switch (r.status) {
          case tgs::PrimeStatus::Yes: return true;
          case tgs::PrimeStatus::No: return false;
          case tgs::PrimeStatus::NotApplicable: return nullptr;
        }
        return nullptr;
      };
      node["prime"] = prime_json(prime);
      node["semiprime"] = prime_json(semi);
      if (prime.witness)
        node["prime_witness"] = tgs::to_labels(
            s->value, {(*prime.witness)[0], (*prime.witness)[1], (*prime.witness)[2]});
      list.push_back(std::move(node));
    }
    doc["ideals"] = std::move(list);
    // Comparison against the other predicate mode, for the literal/strict gap.
    const auto other = tgs::enumerate_k_ideals(s->value, literal == 0, b);
    doc["other_mode_count"] = other.size();
    emit(out, doc);
  });
}

tgs_status tgs_structure_lattice(const tgs_structure* s, int literal, const char* bounds,
                                 int force, char** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    require_usable(s->value, force);
    const tgs::Bounds b = bounds_of(bounds);
    const auto lattice = tgs::build_lattice(s->value, literal != 0, b);
    emit(out, tgs::lattice_to_json(s->value, lattice));
  });
}

tgs_status tgs_structure_quotient(const tgs_structure* s, const char* ideal_csv,
                                  int force, char** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    require_usable(s->value, force);
    if (!ideal_csv) throw tgs::Error(tgs::ErrorKind::Usage, "ideal label list is null");
    const tgs::ElemMask ideal =
        tgs::mask_of(tgs::parse_labels_csv(s->value, ideal_csv));
    const auto q = tgs::build_quotient(s->value, ideal);
    json doc = tgs::quotient_to_json(s->value, q);
    const auto report = tgs::check_axioms(q.induced, bounds_of(nullptr).witness_cap);
    doc["axiom_check"] = tgs::axiom_report_to_json(q.induced, report);
    emit(out, doc);
  });
}

tgs_status tgs_structure_annihilator(const tgs_structure* s, const char* labels_csv,
                                     int force, char** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    require_usable(s->value, force);
    if (!labels_csv) throw tgs::Error(tgs::ErrorKind::Usage, "label list is null");
    const tgs::ElemMask subset =
        tgs::mask_of(tgs::parse_labels_csv(s->value, labels_csv));
    const tgs::ElemMask ann = tgs::annihilator(s->value, subset);
    json doc;
    doc["subset"] = tgs::mask_to_labels(s->value, subset);
    doc["annihilator"] = tgs::mask_to_labels(s->value, ann);
    const auto check = tgs::is_k_ideal(s->value, ann);
    doc["annihilator_is_k_ideal"] = check.ok;
    emit(out, doc);
  });
}

tgs_status tgs_code_build(const tgs_structure* s, const char* spec_json,
                          const char* bounds, int force, tgs_code** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  *out = nullptr;
  return guarded(error, [&] {
    const json spec = parse_json_arg(spec_json, "code spec");
    const tgs::Bounds b = bounds_of(bounds);
    auto handle = new tgs_code{tgs::build_code(s->value, spec, b, force != 0), {}, b};
    *out = handle;
  });
}

void tgs_code_free(tgs_code* c) { delete c; }

tgs_status tgs_code_params(const tgs_code* c, char** out) {
  if (!c || !out) return TGS_ERR_USAGE;
  return guarded(nullptr, [&] {
    emit(out, tgs::code_params_to_json(c->value, tgs::code_params(c->value)));
  });
}

tgs_status tgs_code_members(const tgs_code* c, char** out) {
  if (!c || !out) return TGS_ERR_USAGE;
  return guarded(nullptr, [&] { emit(out, tgs::code_members_to_json(c->value)); });
}

tgs_status tgs_code_cosets(const tgs_code* c, char** out, char** error) {
  if (!c || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] { emit(out, tgs::coset_table_to_json(c->value, cosets_of(c))); });
}

tgs_status tgs_code_decode(const tgs_code* c, const char* word_csv, char** out,
                           char** error) {
  if (!c || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    if (!word_csv) throw tgs::Error(tgs::ErrorKind::Usage, "word is null");
    const tgs::Word received = tgs::parse_labels_csv(c->value.t, word_csv);
    const auto result = tgs::decode(c->value, cosets_of(c), received);
    emit(out, tgs::decode_result_to_json(c->value, received, result));
  });
}

tgs_status tgs_code_nearest(const tgs_code* c, const char* word_csv, char** out,
                            char** error) {
  if (!c || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    if (!word_csv) throw tgs::Error(tgs::ErrorKind::Usage, "word is null");
    const tgs::Word received = tgs::parse_labels_csv(c->value.t, word_csv);
    const auto result = tgs::nearest_codeword(c->value, received);
    emit(out, tgs::nearest_result_to_json(c->value, received, result));
  });
}

tgs_status tgs_code_simulate(const tgs_code* c, const char* options_json, char** out,
                             char** error) {
  if (!c || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    const json opts = parse_json_arg(options_json, "simulation options");
    tgs::SimOptions options;
    const std::string decoder = opts.value("decoder", "syndrome");
    if (decoder == "syndrome")
      options.decoder = tgs::SimOptions::Decoder::Syndrome;
    else if (decoder == "nearest")
      options.decoder = tgs::SimOptions::Decoder::Nearest;
    else
      throw tgs::Error(tgs::ErrorKind::Usage, "decoder must be syndrome or nearest");
    options.w_max = opts.value("w_max", 0);
    const std::string mode = opts.value("mode", "exhaustive");
    if (mode == "exhaustive")
      options.exhaustive = true;
    else if (mode == "sampled")
      options.exhaustive = false;
    else
      throw tgs::Error(tgs::ErrorKind::Usage, "mode must be exhaustive or sampled");
    options.trials = opts.value("trials", std::uint64_t{0});
    if (opts.contains("seed") && !opts["seed"].is_null())
      options.seed = opts["seed"].get<std::uint64_t>();
    const tgs::CosetTable* table = nullptr;
    if (options.decoder == tgs::SimOptions::Decoder::Syndrome) table = &cosets_of(c);
    emit(out, tgs::sim_report_to_json(tgs::simulate(c->value, table, options, c->bounds)));
  });
}

tgs_status tgs_code_span_check(const tgs_structure* s, const char* spec_json,
                               const char* ideal_csv, const char* bounds, int force,
                               char** out, char** error) {
  if (!s || !out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    const json spec = parse_json_arg(spec_json, "code spec");
    if (spec.value("construction", "") != std::string("generated"))
      throw tgs::Error(tgs::ErrorKind::Usage, "span check needs a generated code spec");
    if (!ideal_csv) throw tgs::Error(tgs::ErrorKind::Usage, "ideal label list is null");
    std::vector<tgs::Word> generators;
    for (const auto& g : spec.at("generators")) {
      tgs::Word word;
      for (const auto& cell : g)
        word.push_back(s->value.require(cell.get<std::string>()));
      generators.push_back(std::move(word));
    }
    const std::size_t n = generators.empty() ? 0 : generators.front().size();
    const tgs::ElemMask ideal =
        tgs::mask_of(tgs::parse_labels_csv(s->value, ideal_csv));
    const auto report = tgs::check_span_theorem(s->value, generators, ideal, n,
                                                bounds_of(bounds), force != 0);
    emit(out, tgs::span_report_to_json(s->value, report));
  });
}

tgs_status tgs_claims_run(const char* fixtures_json, const char* options_json,
                          char** report_json, char** error) {
  if (!report_json) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    const json fixtures = parse_json_arg(fixtures_json, "fixtures");
    if (!fixtures.is_array())
      throw tgs::Error(tgs::ErrorKind::Usage, "fixtures must be an array");
    std::vector<std::pair<std::string, json>> set;
    for (const auto& item : fixtures) {
      if (!item.is_object() || !item.contains("name") || !item.contains("document"))
        throw tgs::Error(tgs::ErrorKind::Usage,
                         "each fixture needs \"name\" and \"document\"");
      set.emplace_back(item["name"].get<std::string>(), item["document"]);
    }
    tgs::ClaimsOptions options;
    if (options_json && *options_json) {
      const json opts = parse_json_arg(options_json, "claims options");
      if (opts.contains("bounds"))
        options.bounds = tgs::parse_bounds(opts["bounds"].get<std::string>());
      options.max_n = opts.value("max_n", options.max_n);
      options.witness_cap = opts.value("witness_cap", options.witness_cap);
      options.timings = opts.value("timings", options.timings);
      if (opts.contains("search")) {
        const json& search = opts["search"];
        options.search.m = search.value("m", std::size_t{0});
        options.search.candidates = search.value("candidates", std::uint64_t{0});
        options.search.seed = search.value("seed", std::uint64_t{0});
      }
    }
    emit(report_json, tgs::run_suite(set, options));
  });
}

tgs_status tgs_claims_replay(const char* counterexample_json, int* reproduced,
                             char** error) {
  if (!reproduced) return TGS_ERR_USAGE;
  *reproduced = 0;
  return guarded(error, [&] {
    const json doc = parse_json_arg(counterexample_json, "counterexample");
    *reproduced = tgs::replay_counterexample(doc) ? 1 : 0;
  });
}

tgs_status tgs_fixtures_manifest(char** out) {
  if (!out) return TGS_ERR_USAGE;
  return guarded(nullptr, [&] { emit(out, tgs::fixtures_manifest()); });
}

tgs_status tgs_fixture_document(const char* name, char** out, char** error) {
  if (!out) return TGS_ERR_USAGE;
  return guarded(error, [&] {
    if (!name) throw tgs::Error(tgs::ErrorKind::Usage, "fixture name is null");
    *out = dup_string(tgs::fixture_document(name));
  });
}

}  // extern "C"
