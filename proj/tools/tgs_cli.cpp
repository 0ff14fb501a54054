// tgs — command-line front end over the shared-library C API.
//
// Subcommands: check | ideals | lattice | quotient | annihilator | code |
// decode | simulate | verify-claims | fixtures.  Outputs are deterministic:
// identical invocations produce byte-identical bytes on stdout and in files.
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tgs/tgs.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Owned {
  char* p = nullptr;
  ~Owned() { tgs_string_free(p); }
  std::string str() const { return p ? p : ""; }
  json parse() const { return json::parse(str()); }
};

struct StructureHandle {
  tgs_structure* p = nullptr;
  StructureHandle() = default;
  StructureHandle(StructureHandle&& other) : p(other.p) { other.p = nullptr; }
  StructureHandle& operator=(StructureHandle&& other) {
    std::swap(p, other.p);
    return *this;
  }
  ~StructureHandle() { tgs_structure_free(p); }
};

struct CodeHandle {
  tgs_code* p = nullptr;
  CodeHandle() = default;
  CodeHandle(CodeHandle&& other) : p(other.p) { other.p = nullptr; }
  CodeHandle& operator=(CodeHandle&& other) {
    std::swap(p, other.p);
    return *this;
  }
  ~CodeHandle() { tgs_code_free(p); }
};

[[noreturn]] void die(tgs_status status, const std::string& message) {
  std::cerr << "tgs: error: " << tgs_status_name(status) << ": " << message << "\n";
  std::exit(status == TGS_ERR_USAGE ? 2 : 1);
}

[[noreturn]] void die_usage(const std::string& message) { die(TGS_ERR_USAGE, message); }

void check_status(tgs_status status, const Owned& error) {
  if (status != TGS_OK) die(status, error.p ? error.p : "operation failed");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) die(TGS_ERR_NOT_FOUND, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct GlobalOptions {
  std::string format = "text";
  std::string bounds;  // flag wins over the TGS_BOUNDS environment variable
  bool force = false;
  std::string out;
};

const char* effective_bounds(const GlobalOptions& g) {
  if (!g.bounds.empty()) return g.bounds.c_str();
  if (const char* env = std::getenv("TGS_BOUNDS")) return env;
  return nullptr;
}

void write_output(const GlobalOptions& g, const std::string& text) {
  if (g.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out.good()) die(TGS_ERR_INTERNAL, "cannot write " + g.out);
  out << text;
}

// Small deterministic CSV quoting; labels and names stay plain.
std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string num12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string word_str(const json& labels) {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i].get<std::string>();
  }
  return out + ")";
}

std::string set_str(const json& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i].get<std::string>();
  }
  return out + "}";
}

StructureHandle load_structure(const std::string& path) {
  StructureHandle s;
  Owned err;
  const std::string text = read_file(path);
  check_status(tgs_structure_parse(text.c_str(), &s.p, &err.p), err);
  return s;
}

// Loads a code spec and the structure it references ("tgs" path, resolved
// relative to the spec file).
struct LoadedCode {
  StructureHandle structure;
  CodeHandle code;
};

LoadedCode load_code(const GlobalOptions& g, const std::string& spec_path) {
  LoadedCode out;
  const std::string text = read_file(spec_path);
  json spec = json::parse(text, nullptr, false);
  if (spec.is_discarded()) die(TGS_ERR_PARSE, spec_path + " is not valid JSON");
  if (!spec.contains("tgs") || !spec["tgs"].is_string())
    die(TGS_ERR_PARSE, spec_path + " does not name its TGS document (\"tgs\")");
  const fs::path base = fs::path(spec_path).parent_path();
  out.structure = load_structure((base / spec["tgs"].get<std::string>()).string());
  Owned err;
  check_status(tgs_code_build(out.structure.p, text.c_str(), effective_bounds(g),
                              g.force ? 1 : 0, &out.code.p, &err.p),
               err);
  return out;
}

// ---- text renderers ---------------------------------------------------------

std::string render_witness(const json& w) {
  const std::string kind = w["kind"].get<std::string>();
  auto tern = [](const json& t) {
    return "[" + t[0].get<std::string>() + "," + t[1].get<std::string>() + "," +
           t[2].get<std::string>() + "]";
  };
  if (kind == "monotonicity")
    return tern(w["inputs"]) + " = " + w["lhs"].get<std::string>() + " not below " +
           tern(w["inputs2"]) + " = " + w["rhs"].get<std::string>();
  std::string inputs;
  for (const auto& x : w["inputs"]) {
    if (!inputs.empty()) inputs += ",";
    inputs += x.get<std::string>();
  }
  std::string line = kind + " at (" + inputs + "): " + w["lhs"].get<std::string>() +
                     " != " + w["rhs"].get<std::string>();
  if (w.contains("slot")) line += " [slot " + std::to_string(w["slot"].get<int>()) + "]";
  if (w.contains("gamma")) line += " [gamma " + w["gamma"].get<std::string>() + "]";
  return line;
}

std::string render_check(const json& doc) {
  std::ostringstream out;
  out << "valid: " << (doc["valid"].get<bool>() ? "yes" : "no") << "\n";
  out << "zero-absorbing (informational): "
      << (doc["zero_absorbing"].get<bool>() ? "yes" : "no") << "\n";
  for (const auto& check : doc["checks"]) {
    out << check["id"].get<std::string>() << ": "
        << (check["status"] == "pass" ? "pass" : "FAIL") << " (scanned "
        << check["scanned"].get<std::uint64_t>() << ")";
    if (!check["witnesses"].empty()) {
      out << ", " << check["witnesses"].size() << " witness"
          << (check["witnesses"].size() == 1 ? "" : "es")
          << (check["truncated"].get<bool>() ? " (truncated)" : "");
    }
    out << "\n";
    for (const auto& w : check["witnesses"]) out << "  " << render_witness(w) << "\n";
  }
  return out.str();
}

std::string render_ideal_test(const json& doc) {
  std::ostringstream out;
  out << "set: " << set_str(doc["set"]) << "\n";
  out << "k-ideal (" << doc["mode"].get<std::string>()
      << " mode): " << (doc["is_k_ideal"].get<bool>() ? "yes" : "NO") << "\n";
  if (!doc["witness"].is_null()) {
    const auto& w = doc["witness"];
    out << "witness: clause " << w["clause"].get<std::string>() << ", elements (";
    for (std::size_t i = 0; i < w["inputs"].size(); ++i)
      out << (i ? "," : "") << w["inputs"][i].get<std::string>();
    out << ")";
    if (w.contains("value")) out << " evaluates to " << w["value"].get<std::string>();
    out << "\n";
  }
  return out.str();
}

std::string render_ideals(const json& doc) {
  std::ostringstream out;
  out << "k-ideals (" << doc["mode"].get<std::string>()
      << " mode): " << doc["count"].get<std::size_t>() << "\n";
  for (const auto& ideal : doc["ideals"]) {
    out << "  I" << ideal["index"].get<int>() << ": " << set_str(ideal["labels"]);
    out << "  minimal-nonzero=" << set_str(ideal["minimal_nonzero"]);
    auto tri = [](const json& v) {
      return v.is_null() ? std::string("n/a") : (v.get<bool>() ? "yes" : "no");
    };
    out << "  prime=" << tri(ideal["prime"]) << "  semiprime=" << tri(ideal["semiprime"]);
    out << "\n";
  }
  out << "other predicate mode would yield " << doc["other_mode_count"].get<std::size_t>()
      << " ideals\n";
  return out.str();
}

std::string render_ideals_csv(const json& doc) {
  std::ostringstream out;
  out << "index,size,labels,prime,semiprime\n";
  for (const auto& ideal : doc["ideals"]) {
    std::string labels;
    for (const auto& l : ideal["labels"]) {
      if (!labels.empty()) labels += " ";
      labels += l.get<std::string>();
    }
    auto tri = [](const json& v) {
      return v.is_null() ? std::string("") : (v.get<bool>() ? "yes" : "no");
    };
    out << ideal["index"].get<int>() << "," << ideal["size"].get<int>() << ","
        << csv_cell(labels) << "," << tri(ideal["prime"]) << ","
        << tri(ideal["semiprime"]) << "\n";
  }
  return out.str();
}

std::string render_lattice(const json& doc) {
  std::ostringstream out;
  const auto& ideals = doc["ideals"];
  out << "ideal lattice (" << doc["mode"].get<std::string>() << " mode): " << ideals.size()
      << " ideals, "
      << (doc["distributive"].get<bool>() ? "distributive" : "NOT distributive") << "\n";
  // Rank nodes by longest chain from the bottom, then draw level by level.
  const std::size_t n = ideals.size();
  std::vector<int> rank(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& edge : doc["hasse"]) {
      const int a = edge[0].get<int>(), b = edge[1].get<int>();
      if (rank[std::size_t(b)] < rank[std::size_t(a)] + 1) {
        rank[std::size_t(b)] = rank[std::size_t(a)] + 1;
        changed = true;
      }
    }
  }
  int top = 0;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, rank[i]);
  for (int level = top; level >= 0; --level) {
    out << "  level " << level << ":";
    for (std::size_t i = 0; i < n; ++i)
      if (rank[i] == level) out << "  I" << i << "=" << set_str(ideals[i]["labels"]);
    out << "\n";
  }
  out << "covers:\n";
  for (const auto& edge : doc["hasse"])
    out << "  I" << edge[0].get<int>() << " < I" << edge[1].get<int>() << "\n";
  if (!doc["counterexample"].is_null()) {
    const auto& cx = doc["counterexample"];
    out << "distributivity counterexample: (I" << cx[0].get<int>() << ", I"
        << cx[1].get<int>() << ", I" << cx[2].get<int>() << ")\n";
  }
  return out.str();
}

std::string render_quotient(const json& doc) {
  std::ostringstream out;
  out << "classes: " << doc["classes"].size() << "\n";
  for (std::size_t i = 0; i < doc["classes"].size(); ++i)
    out << "  class " << i << ": " << set_str(doc["classes"][i])
        << (int(i) == doc["zero_class"].get<int>() ? "  (zero class)" : "") << "\n";
  out << "well-defined: " << (doc["well_defined"].get<bool>() ? "yes" : "NO") << "\n";
  if (!doc["witness"].is_null()) out << "witness: " << doc["witness"].dump() << "\n";
  out << "quotient passes axiom check: "
      << (doc["axiom_check"]["valid"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_annihilator(const json& doc) {
  std::ostringstream out;
  out << "subset: " << set_str(doc["subset"]) << "\n";
  out << "annihilator: " << set_str(doc["annihilator"]) << "\n";
  out << "annihilator is a k-ideal: "
      << (doc["annihilator_is_k_ideal"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_params(const json& p) {
  std::ostringstream out;
  out << "construction: " << p["construction"].get<std::string>() << "\n";
  out << "n: " << p["n"].get<int>() << "\n";
  out << "|T|: " << p["alphabet"].get<int>() << "\n";
  if (!p["ideal"].is_null()) out << "ideal: " << set_str(p["ideal"]) << "\n";
  out << "|C|: " << p["cardinality"].get<std::uint64_t>() << "\n";
  out << "k: " << num12(p["k"].get<double>()) << "\n";
  out << "d: "
      << (p["d"].is_null() ? std::string("undefined") : std::to_string(p["d"].get<int>()));
  if (!p["d_source"].is_null()) out << " (" << p["d_source"].get<std::string>() << ")";
  out << "\n";
  out << "t: " << (p["t"].is_null() ? std::string("n/a") : std::to_string(p["t"].get<int>()))
      << "\n";
  if (!p["mu_literal"].is_null())
    out << "mu (literal scalar weight): " << p["mu_literal"].get<int>()
        << ", literal t: " << p["t_literal"].get<int>() << "\n";
  if (!p["cardinality_formula"].is_null())
    out << "|I|^n cross-check: expected "
        << p["cardinality_formula"]["expected"].get<std::uint64_t>() << " -> "
        << (p["cardinality_formula"]["ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  if (!p["d_prediction"].is_null())
    out << "lattice d prediction: " << p["d_prediction"]["predicted"].get<int>() << " -> "
        << (p["d_prediction"]["ok"].get<bool>() ? "ok" : "MISMATCH") << "\n";
  if (!p["phi_equivalence"].is_null())
    out << "constraint set equals {w : Phi(w) in I}: "
        << (p["phi_equivalence"].get<bool>() ? "yes" : "no") << "\n";
  out << "syndrome decoding available: "
      << (p["syndrome_available"].get<bool>() ? "yes" : "no") << "\n";
  return out.str();
}

std::string render_params_csv(const json& p) {
  std::ostringstream out;
  out << "construction,n,|T|,|I|,|C|,k,d,t\n";
  std::string ideal_size;
  if (!p["ideal"].is_null()) ideal_size = std::to_string(p["ideal"].size());
  out << p["construction"].get<std::string>() << "," << p["n"].get<int>() << ","
      << p["alphabet"].get<int>() << "," << ideal_size << ","
      << p["cardinality"].get<std::uint64_t>() << "," << num12(p["k"].get<double>()) << ","
      << (p["d"].is_null() ? "" : std::to_string(p["d"].get<int>())) << ","
      << (p["t"].is_null() ? "" : std::to_string(p["t"].get<int>())) << "\n";
  return out.str();
}

std::string render_members(const json& doc) {
  std::ostringstream out;
  out << "members: " << doc["count"].get<std::uint64_t>() << "\n";
  for (const auto& w : doc["members"]) out << "  " << word_str(w) << "\n";
  return out.str();
}

std::string render_members_csv(const json& doc) {
  std::ostringstream out;
  out << "index,word\n";
  std::size_t index = 0;
  for (const auto& w : doc["members"]) {
    std::string word;
    for (const auto& c : w) {
      if (!word.empty()) word += " ";
      word += c.get<std::string>();
    }
    out << index++ << "," << csv_cell(word) << "\n";
  }
  return out.str();
}

std::string render_cosets(const json& doc) {
  std::ostringstream out;
  out << "words: " << doc["total_words"].get<std::uint64_t>() << "\n";
  out << "zero class " << doc["zero_class"].get<int>()
      << " equals the code: " << (doc["zero_class_is_code"].get<bool>() ? "yes" : "no")
      << "\n";
  for (const auto& cls : doc["classes"]) {
    out << "  class " << cls["index"].get<int>() << " (" << cls["label"].get<std::string>()
        << "): size " << cls["size"].get<std::uint64_t>();
    if (!cls["chosen_leader"].is_null()) {
      out << ", leader " << word_str(cls["chosen_leader"]) << " weight "
          << cls["leader_weight"].get<int>()
          << (cls["unique_leader"].get<bool>() ? " (unique)" : " (ambiguous)");
      if (!cls["unique_leader"].get<bool>()) {
        out << ", all leaders:";
        for (const auto& l : cls["leaders"]) out << " " << word_str(l);
      }
    } else {
      out << " (empty)";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_decode(const json& doc) {
  std::ostringstream out;
  out << "received: " << word_str(doc["received"]) << "\n";
  out << "syndrome: class " << doc["syndrome_class"].get<int>() << " ("
      << doc["syndrome_label"].get<std::string>() << ")\n";
  if (!doc["leader"].is_null()) out << "leader: " << word_str(doc["leader"]) << "\n";
  out << "output: " << word_str(doc["output"]) << "\n";
  out << "status: " << doc["status"].get<std::string>();
  for (const auto& flag : doc["flags"]) out << " [" << flag.get<std::string>() << "]";
  out << "\n";
  return out.str();
}

std::string render_simulate(const json& doc) {
  std::ostringstream out;
  out << "decoder: " << doc["decoder"].get<std::string>() << "\n";
  out << "mode: " << doc["mode"].get<std::string>() << ", w_max " << doc["w_max"].get<int>();
  if (!doc["seed"].is_null()) out << ", seed " << doc["seed"].get<std::uint64_t>();
  out << "\n";
  out << "trials: " << doc["trials"].get<std::uint64_t>()
      << ", successes: " << doc["successes"].get<std::uint64_t>()
      << ", rate: " << num12(doc["rate"].get<double>()) << "\n";
  for (const auto& bucket : doc["by_weight"])
    out << "  weight " << bucket["weight"].get<int>() << ": "
        << bucket["successes"].get<std::uint64_t>() << "/"
        << bucket["trials"].get<std::uint64_t>() << "\n";
  return out.str();
}

std::string render_simulate_csv(const json& doc) {
  std::ostringstream out;
  out << "decoder,w_max,mode,trials,successes,rate,seed\n";
  out << doc["decoder"].get<std::string>() << "," << doc["w_max"].get<int>() << ","
      << doc["mode"].get<std::string>() << "," << doc["trials"].get<std::uint64_t>() << ","
      << doc["successes"].get<std::uint64_t>() << "," << num12(doc["rate"].get<double>())
      << ","
      << (doc["seed"].is_null() ? "" : std::to_string(doc["seed"].get<std::uint64_t>()))
      << "\n";
  return out.str();
}

std::string render_claims(const json& doc) {
  std::ostringstream out;
  out << "fixtures:\n";
  for (const auto& f : doc["fixtures"]) {
    out << "  " << f["name"].get<std::string>() << " [" << f["kind"].get<std::string>()
        << "]: " << f["status"].get<std::string>();
    if (f.contains("error")) out << " (" << f["error"].get<std::string>() << ")";
    out << "\n";
  }
  out << "claims (V verified, F falsified, H hypothesis-not-met, N not-applicable):\n";
  for (const auto& row : doc["results"]) {
    const std::string status = row["status"].get<std::string>();
    const char letter = status == "verified"             ? 'V'
                        : status == "falsified"          ? 'F'
                        : status == "hypothesis-not-met" ? 'H'
                                                         : 'N';
    out << "  [" << letter << "] " << row["claim"].get<std::string>() << " on "
        << row["fixture"].get<std::string>() << " (scanned "
        << row["scanned"].get<std::uint64_t>() << ")";
    if (!row["counterexamples"].empty())
      out << ", " << row["counterexamples"].size() << " counterexample(s)";
    out << "\n";
  }
  return out.str();
}

std::string render_claims_csv(const json& doc) {
  std::ostringstream out;
  out << "claim,fixture,status,scanned,counterexamples\n";
  for (const auto& row : doc["results"])
    out << row["claim"].get<std::string>() << "," << row["fixture"].get<std::string>()
        << "," << row["status"].get<std::string>() << ","
        << row["scanned"].get<std::uint64_t>() << "," << row["counterexamples"].size()
        << "\n";
  return out.str();
}

std::string render_span(const json& doc) {
  std::ostringstream out;
  out << "applicable (generators inside the power): "
      << (doc["applicable"].get<bool>() ? "yes" : "no") << "\n";
  if (doc.contains("offending_generator"))
    out << "offending generator: " << word_str(doc["offending_generator"]) << "\n";
  if (doc["applicable"].get<bool>()) {
    out << "span inside the power: " << (doc["inclusion"].get<bool>() ? "yes" : "NO")
        << "\n";
    out << "span equals the power: " << (doc["equality"].get<bool>() ? "yes" : "no") << "\n";
    out << "span size " << doc["span_size"].get<std::uint64_t>() << ", power size "
        << doc["power_size"].get<std::uint64_t>() << "\n";
  }
  return out.str();
}

std::string render_fixture_list(const json& d) {
  std::ostringstream out;
  out << "bundle version " << d["version"].get<std::string>() << "\n";
  for (const auto& f : d["files"])
    out << "  " << f["name"].get<std::string>() << "  " << f["bytes"].get<std::uint64_t>()
        << " bytes  sha256 " << f["sha256"].get<std::string>() << "\n";
  return out.str();
}

std::string render_fixture_list_csv(const json& d) {
  std::ostringstream out;
  out << "name,bytes,sha256\n";
  for (const auto& f : d["files"])
    out << f["name"].get<std::string>() << "," << f["bytes"].get<std::uint64_t>() << ","
        << f["sha256"].get<std::string>() << "\n";
  return out.str();
}

void emit_rendered(const GlobalOptions& g, const json& doc,
                   std::string (*text)(const json&),
                   std::string (*csv)(const json&) = nullptr) {
  if (g.format == "json") {
    write_output(g, doc.dump(2) + "\n");
  } else if (g.format == "text") {
    write_output(g, text(doc));
  } else if (g.format == "csv") {
    if (!csv) die_usage("csv output is not available for this command");
    write_output(g, csv(doc));
  } else {
    die_usage("unknown format '" + g.format + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite ternary Gamma-semiring codes: structures, ideal lattices, "
               "quotients, codes and syndrome decoding"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tgs_version()));

  GlobalOptions g;
  app.add_option("--format", g.format, "output format: json | text | csv")
      ->check(CLI::IsMember({"json", "text", "csv"}))
      ->capture_default_str();
  app.add_option("--bounds", g.bounds,
                 "enumeration caps, e.g. carrier=12,words=1048576,witnesses=32 "
                 "(environment: TGS_BOUNDS)");
  app.add_flag("--force", g.force, "proceed on structures that fail the axiom check");
  app.add_option("--out", g.out, "write output to this file instead of stdout");

  std::string check_path;
  auto* cmd_check = app.add_subcommand("check", "axiom report for a TGS document");
  cmd_check->add_option("document", check_path, "TGS JSON document")->required();

  std::string ideals_path, ideals_test;
  bool literal_ideals = false;
  auto* cmd_ideals = app.add_subcommand("ideals", "enumerate k-ideals");
  cmd_ideals->add_option("document", ideals_path, "TGS JSON document")->required();
  cmd_ideals->add_flag("--literal-ideals", literal_ideals,
                       "drop the plus-closure clause from the k-ideal predicate");
  cmd_ideals->add_option("--test", ideals_test,
                         "test one subset (comma-separated labels) instead of enumerating");

  std::string lattice_path;
  bool lattice_literal = false;
  auto* cmd_lattice = app.add_subcommand("lattice", "ideal lattice with meet/join tables");
  cmd_lattice->add_option("document", lattice_path, "TGS JSON document")->required();
  cmd_lattice->add_flag("--literal-ideals", lattice_literal,
                        "drop the plus-closure clause from the k-ideal predicate");

  std::string quotient_path, quotient_ideal;
  auto* cmd_quotient = app.add_subcommand("quotient", "Bourne quotient by a k-ideal");
  cmd_quotient->add_option("document", quotient_path, "TGS JSON document")->required();
  cmd_quotient->add_option("--ideal", quotient_ideal, "comma-separated ideal labels")
      ->required();

  std::string ann_path, ann_set;
  auto* cmd_ann = app.add_subcommand("annihilator", "ternary annihilator of a subset");
  cmd_ann->add_option("document", ann_path, "TGS JSON document")->required();
  cmd_ann->add_option("--set", ann_set, "comma-separated labels (may be empty)");

  std::string code_action, code_spec, code_ideal;
  auto* cmd_code = app.add_subcommand("code", "build a code from a spec document");
  cmd_code->add_option("action", code_action, "params | members | cosets | span")
      ->required()
      ->check(CLI::IsMember({"params", "members", "cosets", "span"}));
  cmd_code->add_option("--spec", code_spec, "code spec JSON document")->required();
  cmd_code->add_option("--ideal", code_ideal, "ideal labels (span action)");

  std::string decode_spec, decode_word;
  auto* cmd_decode = app.add_subcommand("decode", "syndrome-decode one word");
  cmd_decode->add_option("--code", decode_spec, "code spec JSON document")->required();
  cmd_decode->add_option("--word", decode_word, "received word, e.g. a,0,1")->required();

  std::string sim_spec, sim_decoder = "syndrome", sim_mode = "exhaustive";
  int sim_wmax = 0;
  std::uint64_t sim_trials = 0;
  std::uint64_t sim_seed = 0;
  bool sim_seed_given = false;
  auto* cmd_sim = app.add_subcommand("simulate", "channel simulation over a code");
  cmd_sim->add_option("--code", sim_spec, "code spec JSON document")->required();
  cmd_sim->add_option("--wmax", sim_wmax, "maximum error weight")->required();
  cmd_sim->add_option("--decoder", sim_decoder, "syndrome | nearest")
      ->check(CLI::IsMember({"syndrome", "nearest"}));
  cmd_sim->add_option("--mode", sim_mode, "exhaustive | sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd_sim->add_option("--trials", sim_trials, "trial count (sampled mode)");
  cmd_sim->add_option("--seed", sim_seed, "RNG seed (required for sampled mode)");

  std::string claims_dir;
  int claims_max_n = 3;
  bool claims_timings = false;
  std::size_t search_m = 0;
  std::uint64_t search_candidates = 0, search_seed = 0;
  auto* cmd_claims =
      app.add_subcommand("verify-claims", "run the claims suite over fixtures");
  cmd_claims->add_option("--fixtures", claims_dir, "directory of fixture documents")
      ->required();
  cmd_claims->add_option("--max-n", claims_max_n, "largest code length per claim")
      ->capture_default_str();
  cmd_claims->add_flag("--timings", claims_timings,
                       "include wall time per claim (non-reproducible output)");
  cmd_claims->add_option("--search-m", search_m, "random-search carrier size (2..4)");
  cmd_claims->add_option("--search-candidates", search_candidates,
                         "random-search candidate count");
  cmd_claims->add_option("--search-seed", search_seed, "random-search seed");

  std::string fixtures_action, fixtures_dir;
  auto* cmd_fixtures = app.add_subcommand("fixtures", "bundled fixture documents");
  cmd_fixtures->add_option("action", fixtures_action, "list | write")
      ->required()
      ->check(CLI::IsMember({"list", "write"}));
  cmd_fixtures->add_option("--dir", fixtures_dir, "target directory (write action)");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    std::cout << tgs_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    die_usage(e.what());
  }
  if (cmd_sim->count("--seed")) sim_seed_given = true;

  if (*cmd_check) {
    auto s = load_structure(check_path);
    Owned report, err;
    check_status(tgs_structure_check(s.p, effective_bounds(g), &report.p, &err.p), err);
    emit_rendered(g, report.parse(), render_check);
  } else if (*cmd_ideals) {
    auto s = load_structure(ideals_path);
    if (cmd_ideals->count("--test")) {
      Owned verdict, err;
      check_status(tgs_structure_test_ideal(s.p, ideals_test.c_str(),
                                            literal_ideals ? 1 : 0, &verdict.p, &err.p),
                   err);
      emit_rendered(g, verdict.parse(), render_ideal_test);
    } else {
      Owned list, err;
      check_status(tgs_structure_ideals(s.p, literal_ideals ? 1 : 0, effective_bounds(g),
                                        g.force ? 1 : 0, &list.p, &err.p),
                   err);
      emit_rendered(g, list.parse(), render_ideals, render_ideals_csv);
    }
  } else if (*cmd_lattice) {
    auto s = load_structure(lattice_path);
    Owned lattice, err;
    check_status(tgs_structure_lattice(s.p, lattice_literal ? 1 : 0, effective_bounds(g),
                                       g.force ? 1 : 0, &lattice.p, &err.p),
                 err);
    emit_rendered(g, lattice.parse(), render_lattice);
  } else if (*cmd_quotient) {
    auto s = load_structure(quotient_path);
    Owned quotient, err;
    check_status(tgs_structure_quotient(s.p, quotient_ideal.c_str(), g.force ? 1 : 0,
                                        &quotient.p, &err.p),
                 err);
    emit_rendered(g, quotient.parse(), render_quotient);
  } else if (*cmd_ann) {
    auto s = load_structure(ann_path);
    Owned ann, err;
    check_status(
        tgs_structure_annihilator(s.p, ann_set.c_str(), g.force ? 1 : 0, &ann.p, &err.p),
        err);
    emit_rendered(g, ann.parse(), render_annihilator);
  } else if (*cmd_code) {
    if (code_action == "span") {
      if (code_ideal.empty()) die_usage("span action needs --ideal");
      const std::string text = read_file(code_spec);
      json spec = json::parse(text, nullptr, false);
      if (spec.is_discarded()) die(TGS_ERR_PARSE, code_spec + " is not valid JSON");
      if (!spec.contains("tgs"))
        die(TGS_ERR_PARSE, "code spec does not name its TGS document");
      const fs::path base = fs::path(code_spec).parent_path();
      auto s = load_structure((base / spec["tgs"].get<std::string>()).string());
      Owned report, err;
      check_status(tgs_code_span_check(s.p, text.c_str(), code_ideal.c_str(),
                                       effective_bounds(g), g.force ? 1 : 0, &report.p,
                                       &err.p),
                   err);
      emit_rendered(g, report.parse(), render_span);
    } else {
      auto loaded = load_code(g, code_spec);
      if (code_action == "params") {
        Owned params;
        check_status(tgs_code_params(loaded.code.p, &params.p), Owned{});
        emit_rendered(g, params.parse(), render_params, render_params_csv);
      } else if (code_action == "members") {
        Owned members;
        check_status(tgs_code_members(loaded.code.p, &members.p), Owned{});
        emit_rendered(g, members.parse(), render_members, render_members_csv);
      } else {
        Owned cosets, err;
        check_status(tgs_code_cosets(loaded.code.p, &cosets.p, &err.p), err);
        emit_rendered(g, cosets.parse(), render_cosets);
      }
    }
  } else if (*cmd_decode) {
    auto loaded = load_code(g, decode_spec);
    Owned decoded, err;
    check_status(tgs_code_decode(loaded.code.p, decode_word.c_str(), &decoded.p, &err.p),
                 err);
    emit_rendered(g, decoded.parse(), render_decode);
  } else if (*cmd_sim) {
    auto loaded = load_code(g, sim_spec);
    json options;
    options["decoder"] = sim_decoder;
    options["w_max"] = sim_wmax;
    options["mode"] = sim_mode;
    if (sim_trials) options["trials"] = sim_trials;
    if (sim_seed_given) options["seed"] = sim_seed;
    Owned report, err;
    check_status(
        tgs_code_simulate(loaded.code.p, options.dump().c_str(), &report.p, &err.p), err);
    emit_rendered(g, report.parse(), render_simulate, render_simulate_csv);
  } else if (*cmd_claims) {
    if (!fs::is_directory(claims_dir))
      die(TGS_ERR_NOT_FOUND, claims_dir + " is not a directory");
    std::vector<fs::path> paths;
    for (const auto& entry : fs::directory_iterator(claims_dir))
      if (entry.is_regular_file() && entry.path().extension() == ".json" &&
          entry.path().filename() != "manifest.json")
        paths.push_back(entry.path());
    std::sort(paths.begin(), paths.end());
    json fixtures = json::array();
    for (const auto& path : paths) {
      json doc = json::parse(read_file(path), nullptr, false);
      if (doc.is_discarded()) doc = json();  // listed as a load failure by the suite
      fixtures.push_back({{"name", path.filename().string()}, {"document", doc}});
    }
    json options;
    if (effective_bounds(g)) options["bounds"] = effective_bounds(g);
    options["max_n"] = claims_max_n;
    options["timings"] = claims_timings;
    if (search_candidates)
      options["search"] = {{"m", search_m}, {"candidates", search_candidates},
                           {"seed", search_seed}};
    Owned report, err;
    check_status(
        tgs_claims_run(fixtures.dump().c_str(), options.dump().c_str(), &report.p, &err.p),
        err);
    const json doc = report.parse();
    emit_rendered(g, doc, render_claims, render_claims_csv);
    // Counterexamples as standalone replayable files, next to --out.
    if (!g.out.empty()) {
      fs::path parent = fs::path(g.out).parent_path();
      if (parent.empty()) parent = ".";
      const fs::path dir = parent / "counterexamples";
      bool any = false;
      for (const auto& row : doc["results"])
        if (!row["counterexamples"].empty()) any = true;
      if (any) {
        fs::create_directories(dir);
        for (const auto& row : doc["results"]) {
          std::size_t index = 0;
          for (const auto& cx : row["counterexamples"]) {
            const std::string name =
                row["claim"].get<std::string>() + "-" +
                fs::path(row["fixture"].get<std::string>()).stem().string() + "-" +
                std::to_string(index++) + ".json";
            std::ofstream out(dir / name, std::ios::binary);
            out << cx.dump(2) + "\n";
          }
        }
      }
    }
  } else if (*cmd_fixtures) {
    Owned manifest;
    check_status(tgs_fixtures_manifest(&manifest.p), Owned{});
    const json doc = manifest.parse();
    if (fixtures_action == "list") {
      emit_rendered(g, doc, render_fixture_list, render_fixture_list_csv);
    } else {
      if (fixtures_dir.empty()) die_usage("write action needs --dir");
      fs::create_directories(fixtures_dir);
      for (const auto& f : doc["files"]) {
        Owned content, err;
        check_status(tgs_fixture_document(f["name"].get<std::string>().c_str(),
                                          &content.p, &err.p),
                     err);
        std::ofstream out(fs::path(fixtures_dir) / f["name"].get<std::string>(),
                          std::ios::binary);
        out << content.str();
      }
      std::ofstream mf(fs::path(fixtures_dir) / "manifest.json", std::ios::binary);
      mf << doc.dump(2) + "\n";
      std::ostringstream summary;
      summary << "wrote " << doc["files"].size() + 1 << " files to " << fixtures_dir
              << "\n";
      write_output(g, summary.str());
    }
  }
  return 0;
}
