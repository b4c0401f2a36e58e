#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "consensus/errors.hpp"
#include "consensus/preference.hpp"
#include "consensus/profile.hpp"

namespace consensus {

/// A parsed PrefLib SOC document: '#'-prefixed "KEY: VALUE" metadata lines
/// followed by "count: a,b,c" ballot lines with 1-based alternative numbers.
/// Only complete strict orders are accepted; ties and partial ballots are
/// rejected at parse time.
struct PreflibDocument {
  std::vector<std::pair<std::string, std::string>> metadata;  // in file order
  std::vector<std::string> alternative_names;                 // index 0 = alternative 1
  std::vector<std::pair<std::uint64_t, std::vector<int>>> ballots;  // 0-based rankings
  int alternative_count = 0;

  friend bool operator==(const PreflibDocument&, const PreflibDocument&) = default;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

inline bool parse_u64(const std::string& s, std::uint64_t& out) {
  if (s.empty()) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    const std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
    if (out > (UINT64_MAX - digit) / 10) return false;
    out = out * 10 + digit;
  }
  return true;
}

}  // namespace detail

inline PreflibDocument parse_preflib(std::string_view text) {
  PreflibDocument doc;
  std::vector<std::pair<int, std::string>> name_entries;  // (1-based index, name)
  std::uint64_t declared_voters = 0;
  bool has_declared_voters = false;
  std::uint64_t declared_unique = 0;
  bool has_declared_unique = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    std::string_view raw = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                          : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    const std::string line = detail::trim(raw);
    if (line.empty()) continue;

    if (line[0] == '#') {
      const std::size_t colon = line.find(':');
      if (colon == std::string::npos) continue;  // bare comment
      std::string key = detail::trim(std::string_view(line).substr(1, colon - 1));
      std::string value = detail::trim(std::string_view(line).substr(colon + 1));
      if (key == "NUMBER ALTERNATIVES") {
        std::uint64_t v = 0;
        if (!detail::parse_u64(value, v) || v == 0)
          throw ParseError("invalid NUMBER ALTERNATIVES", line_no);
        doc.alternative_count = static_cast<int>(v);
      } else if (key == "NUMBER VOTERS") {
        if (!detail::parse_u64(value, declared_voters))
          throw ParseError("invalid NUMBER VOTERS", line_no);
        has_declared_voters = true;
      } else if (key == "NUMBER UNIQUE ORDERS") {
        if (!detail::parse_u64(value, declared_unique))
          throw ParseError("invalid NUMBER UNIQUE ORDERS", line_no);
        has_declared_unique = true;
      } else if (key.rfind("ALTERNATIVE NAME ", 0) == 0) {
        std::uint64_t idx = 0;
        if (!detail::parse_u64(key.substr(17), idx) || idx == 0)
          throw ParseError("invalid ALTERNATIVE NAME index", line_no);
        name_entries.emplace_back(static_cast<int>(idx), value);
      }
      doc.metadata.emplace_back(std::move(key), std::move(value));
      continue;
    }

    // Ballot line: "count: a,b,c"
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected 'count: ranking' ballot line", line_no);
    std::uint64_t count = 0;
    if (!detail::parse_u64(detail::trim(std::string_view(line).substr(0, colon)), count) ||
        count == 0)
      throw ParseError("malformed ballot count", line_no);

    std::vector<int> ranking;
    const std::string rest = detail::trim(std::string_view(line).substr(colon + 1));
    if (rest.find('{') != std::string::npos)
      throw UnsupportedFormatError("tie groups are not supported: '" + rest + "'", line_no);
    std::size_t start = 0;
    while (start <= rest.size()) {
      std::size_t comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      const std::string token = detail::trim(std::string_view(rest).substr(start, comma - start));
      start = comma + 1;
      if (token.empty())
        throw ParseError("empty entry in ranking", line_no);
      std::uint64_t alt = 0;
      if (!detail::parse_u64(token, alt) || alt == 0)
        throw ParseError("malformed alternative '" + token + "'", line_no);
      ranking.push_back(static_cast<int>(alt) - 1);
      if (start > rest.size()) break;
    }

    if (doc.alternative_count == 0) doc.alternative_count = static_cast<int>(ranking.size());
    const int k = doc.alternative_count;
    if (static_cast<int>(ranking.size()) != k)
      throw UnsupportedFormatError("ballot is not a complete order over " + std::to_string(k) +
                                       " alternatives",
                                   line_no);
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    for (int alt : ranking) {
      if (alt < 0 || alt >= k)
        throw ParseError("alternative number out of range", line_no);
      if (seen[static_cast<std::size_t>(alt)])
        throw ParseError("alternative repeated in ranking", line_no);
      seen[static_cast<std::size_t>(alt)] = 1;
    }
    doc.ballots.emplace_back(count, std::move(ranking));
  }

  if (doc.ballots.empty()) throw ParseError("document contains no ballots");

  if (has_declared_voters) {
    std::uint64_t total = 0;
    for (const auto& [count, ranking] : doc.ballots) total += count;
    if (total != declared_voters)
      throw ParseError("NUMBER VOTERS (" + std::to_string(declared_voters) +
                       ") does not match ballot counts (" + std::to_string(total) + ")");
  }
  if (has_declared_unique && declared_unique != doc.ballots.size())
    throw ParseError("NUMBER UNIQUE ORDERS does not match the number of ballot lines");

  doc.alternative_names.assign(static_cast<std::size_t>(doc.alternative_count), "");
  for (const auto& [idx, name] : name_entries) {
    if (idx < 1 || idx > doc.alternative_count)
      throw ParseError("ALTERNATIVE NAME index out of range");
    doc.alternative_names[static_cast<std::size_t>(idx - 1)] = name;
  }
  for (std::size_t i = 0; i < doc.alternative_names.size(); ++i)
    if (doc.alternative_names[i].empty())
      doc.alternative_names[i] = std::to_string(i + 1);

  return doc;
}

/// Canonical text form: metadata lines in stored order, then ballot lines
/// with 1-based alternatives. parse(serialize(doc)) == doc, and files
/// written in this canonical form round-trip byte-for-byte.
inline std::string serialize_preflib(const PreflibDocument& doc) {
  std::string out;
  for (const auto& [key, value] : doc.metadata) {
    out += "# ";
    out += key;
    out += ": ";
    out += value;
    out += '\n';
  }
  for (const auto& [count, ranking] : doc.ballots) {
    out += std::to_string(count);
    out += ": ";
    for (std::size_t i = 0; i < ranking.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(ranking[i] + 1);
    }
    out += '\n';
  }
  return out;
}

/// The document's ballots as a Profile (duplicate lines aggregate).
inline Profile preflib_to_profile(const PreflibDocument& doc) {
  std::vector<std::pair<Preference, std::uint64_t>> counts;
  counts.reserve(doc.ballots.size());
  for (const auto& [count, ranking] : doc.ballots)
    counts.emplace_back(Preference(ranking), count);
  return Profile::from_counts(doc.alternative_count, counts);
}

}  // namespace consensus
