// Ternary syndrome, coset table with minimal-weight leaders, syndrome
// decoding, a brute-force nearest-codeword oracle, and channel simulation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "core/codes.hpp"
#include "core/common.hpp"

namespace tgs {

// Class of Phi(word) in the quotient. Requires syndrome machinery (quotient).
int syndrome(const Code& code, const Word& word);

struct CosetClass {
  int quotient_class = 0;           // index into code.quotient->classes
  std::vector<WordRank> members;    // ascending
  std::vector<WordRank> leaders;    // all minimal-weight members
  WordRank chosen_leader = 0;       // lexicographically least leader
  int leader_weight = 0;
  bool unique_leader = false;
};

struct CosetTable {
  std::vector<CosetClass> classes;  // one per quotient class, may be empty
  std::uint64_t total_words = 0;
  bool zero_class_is_code = false;
};

CosetTable build_coset_table(const Code& code, const Bounds& bounds);

enum class DecodeStatus { Clean, Corrected, FailedNotCodeword };

const char* decode_status_name(DecodeStatus status);

struct DecodeResult {
  Word output;
  DecodeStatus status = DecodeStatus::Clean;
  bool ambiguous_leader = false;  // leader of the hit class is not unique
  std::optional<Word> leader;
  int syndrome_class = 0;
  bool in_code = false;
};

DecodeResult decode(const Code& code, const CosetTable& table, const Word& received);

struct NearestResult {
  Word word;
  int distance = 0;
  bool unique = false;
};

NearestResult nearest_codeword(const Code& code, const Word& received);

struct SimOptions {
  enum class Decoder { Syndrome, Nearest } decoder = Decoder::Syndrome;
  int w_max = 0;
  bool exhaustive = true;
  std::uint64_t trials = 0;                // sampled mode
  std::optional<std::uint64_t> seed;       // required for sampled mode
};

struct SimBucket {
  int weight = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
};

struct SimReport {
  SimOptions options;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double rate = 0.0;  // 12 significant digits
  std::vector<SimBucket> by_weight;
};

// Draws (exhaustively or seeded-uniformly) pairs (codeword c, error e with
// weight <= w_max), transmits r = c (+) e, decodes, scores output == c.
SimReport simulate(const Code& code, const CosetTable* table, const SimOptions& options,
                   const Bounds& bounds);

nlohmann::json coset_table_to_json(const Code& code, const CosetTable& table);
nlohmann::json decode_result_to_json(const Code& code, const Word& received,
                                     const DecodeResult& result);
nlohmann::json nearest_result_to_json(const Code& code, const Word& received,
                                      const NearestResult& result);
nlohmann::json sim_report_to_json(const SimReport& report);

}  // namespace tgs
