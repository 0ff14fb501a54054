#include "core/decoder.hpp"

#include <algorithm>
#include <random>

#include "core/jsonutil.hpp"

namespace tgs {

using nlohmann::json;

namespace {

const Quotient& need_quotient(const Code& code) {
  if (!code.quotient)
    throw Error(ErrorKind::Usage,
                "code has no syndrome machinery (needs a constraint or kernel "
                "construction whose ideal is a k-ideal)");
  return *code.quotient;
}

const Morphism& need_phi(const Code& code) {
  if (!code.phi)
    throw Error(ErrorKind::Usage, "code has no constraint morphism");
  return *code.phi;
}

// Unbiased bounded draw; rejection keeps the stream reproducible.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace

const char* decode_status_name(DecodeStatus status) {
  switch (status) {
    case DecodeStatus::Clean: return "clean";
    case DecodeStatus::Corrected: return "corrected";
    case DecodeStatus::FailedNotCodeword: return "failed-not-codeword";
  }
  return "?";
}

int syndrome(const Code& code, const Word& word) {
  const Quotient& q = need_quotient(code);
  return project(q, eval_phi(code.t, need_phi(code), word));
}

CosetTable build_coset_table(const Code& code, const Bounds& bounds) {
  const Quotient& q = need_quotient(code);
  const Structure& t = code.t;
  const std::uint64_t total = word_space_size(t, code.n, bounds);

  CosetTable table;
  table.total_words = total;
  table.classes.resize(q.classes.size());
  for (std::size_t c = 0; c < q.classes.size(); ++c)
    table.classes[c].quotient_class = int(c);

  for (WordRank r = 0; r < total; ++r) {
    const Word w = word_unrank(t, code.n, r);
    table.classes[std::size_t(syndrome(code, w))].members.push_back(r);
  }
  for (auto& cls : table.classes) {
    if (cls.members.empty()) continue;
    int best = int(code.n) + 1;
    for (WordRank r : cls.members)
      best = std::min(best, word_weight(t, word_unrank(t, code.n, r)));
    cls.leader_weight = best;
    for (WordRank r : cls.members)
      if (word_weight(t, word_unrank(t, code.n, r)) == best) cls.leaders.push_back(r);
    cls.chosen_leader = cls.leaders.front();  // ascending rank = lex least
    cls.unique_leader = cls.leaders.size() == 1;
  }

  const int zero_class = q.class_of[t.zero()];
  table.zero_class_is_code =
      table.classes[std::size_t(zero_class)].members == code.members;
  return table;
}

DecodeResult decode(const Code& code, const CosetTable& table, const Word& received) {
  if (received.size() != code.n)
    throw Error(ErrorKind::Usage, "received word length does not match the code");
  DecodeResult result;
  result.syndrome_class = syndrome(code, received);
  const Quotient& q = *code.quotient;
  const int zero_class = q.class_of[code.t.zero()];
  if (result.syndrome_class == zero_class) {
    result.status = DecodeStatus::Clean;
    result.output = received;
    result.in_code = code.contains_word(received);
    return result;
  }
  const CosetClass& cls = table.classes[std::size_t(result.syndrome_class)];
  const Word leader = word_unrank(code.t, code.n, cls.chosen_leader);
  result.leader = leader;
  result.ambiguous_leader = !cls.unique_leader;
  result.output = ominus(code.t, received, leader);
  result.in_code = code.contains_word(result.output);
  result.status = result.in_code ? DecodeStatus::Corrected : DecodeStatus::FailedNotCodeword;
  return result;
}

NearestResult nearest_codeword(const Code& code, const Word& received) {
  if (received.size() != code.n)
    throw Error(ErrorKind::Usage, "received word length does not match the code");
  if (code.members.empty()) throw Error(ErrorKind::Usage, "code is empty");
  NearestResult result;
  int best = int(code.n) + 1;
  std::size_t ties = 0;
  for (WordRank r : code.members) {
    const Word member = word_unrank(code.t, code.n, r);
    const int distance = hamming(member, received);
    if (distance < best) {
      best = distance;
      result.word = member;  // first hit at ascending rank = lex least
      ties = 1;
    } else if (distance == best) {
      ++ties;
    }
  }
  result.distance = best;
  result.unique = ties == 1;
  return result;
}

SimReport simulate(const Code& code, const CosetTable* table, const SimOptions& options,
                   const Bounds& bounds) {
  if (options.w_max < 0 || std::size_t(options.w_max) > code.n)
    throw Error(ErrorKind::Usage, "w_max must lie between 0 and the code length");
  if (!options.exhaustive && !options.seed)
    throw Error(ErrorKind::Usage, "sampled simulation requires a seed for reproducibility");
  if (!options.exhaustive && options.trials == 0)
    throw Error(ErrorKind::Usage, "sampled simulation requires a positive trial count");
  if (options.decoder == SimOptions::Decoder::Syndrome && table == nullptr)
    throw Error(ErrorKind::Usage, "syndrome simulation requires a coset table");
  if (code.members.empty()) throw Error(ErrorKind::Usage, "code is empty");

  const Structure& t = code.t;
  const auto errors = words_of_weight_at_most(t, code.n, options.w_max, bounds);

  SimReport report;
  report.options = options;
  report.by_weight.resize(std::size_t(options.w_max) + 1);
  for (int w = 0; w <= options.w_max; ++w) report.by_weight[std::size_t(w)].weight = w;

  auto run_pair = [&](WordRank c_rank, WordRank e_rank) {
    const Word c = word_unrank(t, code.n, c_rank);
    const Word e = word_unrank(t, code.n, e_rank);
    const Word r = word_plus(t, c, e);
    bool success;
    if (options.decoder == SimOptions::Decoder::Syndrome) {
      success = decode(code, *table, r).output == c;
    } else {
      success = nearest_codeword(code, r).word == c;
    }
    auto& bucket = report.by_weight[std::size_t(word_weight(t, e))];
    ++bucket.trials;
    ++report.trials;
    if (success) {
      ++bucket.successes;
      ++report.successes;
    }
  };

  if (options.exhaustive) {
    for (WordRank c_rank : code.members)
      for (WordRank e_rank : errors) run_pair(c_rank, e_rank);
  } else {
    std::mt19937_64 rng(*options.seed);
    for (std::uint64_t i = 0; i < options.trials; ++i) {
      const WordRank c_rank = code.members[draw(rng, code.members.size())];
      const WordRank e_rank = errors[draw(rng, errors.size())];
      run_pair(c_rank, e_rank);
    }
  }
  report.rate = report.trials == 0
                    ? 0.0
                    : round_sig12(double(report.successes) / double(report.trials));
  return report;
}

json coset_table_to_json(const Code& code, const CosetTable& table) {
  const Structure& t = code.t;
  const Quotient& q = *code.quotient;
  json doc;
  doc["n"] = code.n;
  doc["total_words"] = table.total_words;
  doc["zero_class"] = q.class_of[t.zero()];
  doc["zero_class_is_code"] = table.zero_class_is_code;

  // Descriptive stratification: classes layered by longest chain below them
  // in the induced class order. Reporting only; decoding never consults it.
  const std::size_t k = q.classes.size();
  std::vector<int> height(k, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (Elem lo = 0; lo < k; ++lo)
      for (Elem hi = 0; hi < k; ++hi)
        if (lo != hi && q.induced.leq(lo, hi) && height[hi] < height[lo] + 1) {
          height[hi] = height[lo] + 1;
          changed = true;
        }
  }
  std::vector<int> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = int(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(height[std::size_t(a)], a) < std::tie(height[std::size_t(b)], b);
  });
  json strata = json::array();
  for (int idx : order)
    strata.push_back({{"class", idx},
                      {"label", q.induced.label(Elem(idx))},
                      {"height", height[std::size_t(idx)]}});
  doc["stratification"] = std::move(strata);
  json classes = json::array();
  for (const auto& cls : table.classes) {
    json c;
    c["index"] = cls.quotient_class;
    c["label"] = q.induced.label(Elem(cls.quotient_class));
    c["size"] = cls.members.size();
    if (!cls.members.empty()) {
      json leaders = json::array();
      for (WordRank r : cls.leaders)
        leaders.push_back(to_labels(t, word_unrank(t, code.n, r)));
      c["leaders"] = std::move(leaders);
      c["chosen_leader"] = to_labels(t, word_unrank(t, code.n, cls.chosen_leader));
      c["leader_weight"] = cls.leader_weight;
      c["unique_leader"] = cls.unique_leader;
    } else {
      c["leaders"] = json::array();
      c["chosen_leader"] = nullptr;
      c["leader_weight"] = nullptr;
      c["unique_leader"] = nullptr;
    }
    classes.push_back(std::move(c));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

json decode_result_to_json(const Code& code, const Word& received,
                           const DecodeResult& result) {
  const Structure& t = code.t;
  json doc;
  doc["received"] = to_labels(t, received);
  doc["syndrome_class"] = result.syndrome_class;
  doc["syndrome_label"] = code.quotient->induced.label(Elem(result.syndrome_class));
  doc["status"] = decode_status_name(result.status);
  json flags = json::array();
  if (result.ambiguous_leader) flags.push_back("ambiguous-leader");
  doc["flags"] = std::move(flags);
  doc["leader"] = result.leader ? json(to_labels(t, *result.leader)) : json(nullptr);
  doc["output"] = to_labels(t, result.output);
  doc["in_code"] = result.in_code;
  return doc;
}

json nearest_result_to_json(const Code& code, const Word& received,
                            const NearestResult& result) {
  json doc;
  doc["received"] = to_labels(code.t, received);
  doc["word"] = to_labels(code.t, result.word);
  doc["distance"] = result.distance;
  doc["unique"] = result.unique;
  return doc;
}

json sim_report_to_json(const SimReport& report) {
  json doc;
  doc["decoder"] =
      report.options.decoder == SimOptions::Decoder::Syndrome ? "syndrome" : "nearest";
  doc["w_max"] = report.options.w_max;
  doc["mode"] = report.options.exhaustive ? "exhaustive" : "sampled";
  doc["trials"] = report.trials;
  doc["successes"] = report.successes;
  doc["rate"] = report.rate;
  doc["seed"] = report.options.seed ? json(*report.options.seed) : json(nullptr);
  json buckets = json::array();
  for (const auto& bucket : report.by_weight) {
    json b;
    b["weight"] = bucket.weight;
    b["trials"] = bucket.trials;
    b["successes"] = bucket.successes;
    buckets.push_back(std::move(b));
  }
  doc["by_weight"] = std::move(buckets);
  return doc;
}

}  // namespace tgs
