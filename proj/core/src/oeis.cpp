#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "mpap/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <httplib.h>

#include "mpap/oeis_embedded.hpp"

namespace mpap {

namespace {

bool valid_id(const std::string& id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (size_t i = 1; i < 7; ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

const std::map<std::string, std::vector<Int>>& embedded_table() {
  static const std::map<std::string, std::vector<Int>> table = [] {
    std::map<std::string, std::vector<Int>> t;
    std::istringstream in(detail::kEmbeddedSequences);
    std::string line;
    while (std::getline(in, line)) {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      std::string id = line.substr(0, colon);
      if (!valid_id(id)) continue;
      std::istringstream rest(line.substr(colon + 1));
      std::vector<Int> terms;
      std::string tok;
      while (rest >> tok) terms.emplace_back(tok);
      t.emplace(std::move(id), std::move(terms));
    }
    return t;
  }();
  return table;
}

bool offline() {
  const char* v = std::getenv("MAP_OFFLINE");
  return v && std::string(v) == "1";
}

std::optional<std::filesystem::path> cache_dir() {
  const char* v = std::getenv("OEIS_CACHE_DIR");
  if (!v || !*v) return std::nullopt;
  return std::filesystem::path(v);
}

std::string base_url() {
  const char* v = std::getenv("OEIS_BASE_URL");
  return (v && *v) ? std::string(v) : std::string("https://oeis.org");
}

std::string now_iso8601() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

void write_cache(const std::filesystem::path& dir, const std::string& id,
                 const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  auto final_path = dir / (id + ".txt");
  auto tmp_path = dir / (id + ".txt.tmp");
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << body;
  }
  std::filesystem::rename(tmp_path, final_path, ec);
  if (ec) std::filesystem::remove(tmp_path, ec);
}

}  // namespace

std::vector<Int> parse_bfile(const std::string& text) {
  std::vector<Int> terms;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#') continue;
    std::istringstream fields(line);
    std::string idx, val, rest;
    if (!(fields >> idx >> val) || (fields >> rest) || !integer_token(idx) ||
        !integer_token(val))
      throw OeisError(OeisErrorKind::ParseError,
                      "malformed b-file line " + std::to_string(line_no), line_no);
    terms.emplace_back(val);
  }
  return terms;
}

std::vector<std::string> embedded_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, terms] : embedded_table()) ids.push_back(id);
  return ids;
}

SequenceRef fetch_bfile(const std::string& id) {
  if (!valid_id(id))
    throw OeisError(OeisErrorKind::UnknownSequence, "bad sequence id: " + id);
  if (offline())
    throw OeisError(OeisErrorKind::NetworkDisabled,
                    "network access disabled by MAP_OFFLINE");
  std::string path = "/" + id + "/b" + id.substr(1) + ".txt";
  httplib::Client client(base_url());
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(10, 0);
  client.set_follow_location(true);
  auto res = client.Get(path);
  if (!res)
    throw OeisError(OeisErrorKind::FetchFailed, "no response from " + base_url(), 0);
  if (res->status != 200)
    throw OeisError(OeisErrorKind::FetchFailed,
                    "fetch failed with status " + std::to_string(res->status),
                    res->status);
  SequenceRef ref;
  ref.id = id;
  ref.terms = parse_bfile(res->body);
  ref.source = SequenceRef::Source::Fetched;
  ref.fetched_at = now_iso8601();
  if (auto dir = cache_dir()) write_cache(*dir, id, res->body);
  return ref;
}

SequenceRef load_reference(const std::string& id) {
  if (!valid_id(id))
    throw OeisError(OeisErrorKind::UnknownSequence, "bad sequence id: " + id);
  const auto& table = embedded_table();
  if (auto it = table.find(id); it != table.end()) {
    SequenceRef ref;
    ref.id = id;
    ref.terms = it->second;
    ref.source = SequenceRef::Source::Embedded;
    return ref;
  }
  if (auto dir = cache_dir()) {
    auto path = *dir / (id + ".txt");
    std::ifstream in(path, std::ios::binary);
    if (in) {
      std::ostringstream body;
      body << in.rdbuf();
      SequenceRef ref;
      ref.id = id;
      ref.terms = parse_bfile(body.str());
      ref.source = SequenceRef::Source::Fetched;
      ref.fetched_at = now_iso8601();
      return ref;
    }
  }
  if (offline())
    throw OeisError(OeisErrorKind::NetworkDisabled,
                    id + " is not embedded and MAP_OFFLINE=1 forbids fetching");
  return fetch_bfile(id);
}

MatchResult match_shift(const std::vector<Int>& computed, const SequenceRef& ref,
                        int max_shift) {
  int nc = static_cast<int>(computed.size());
  int nr = static_cast<int>(ref.terms.size());
  bool any_long_enough = false;
  std::vector<int> hits;
  for (int s = -max_shift; s <= max_shift; ++s) {
    int lo = std::max(0, -s);
    int hi = std::min(nc - 1, nr - 1 - s);
    int overlap = hi - lo + 1;
    if (overlap < 8) continue;
    any_long_enough = true;
    bool all = true;
    for (int i = lo; i <= hi; ++i)
      if (computed[static_cast<size_t>(i)] != ref.terms[static_cast<size_t>(i + s)]) {
        all = false;
        break;
      }
    if (all) hits.push_back(s);
  }
  if (!any_long_enough) return {MatchResult::Status::OverlapTooShort, 0};
  if (hits.empty()) return {MatchResult::Status::NoMatch, 0};
  if (hits.size() > 1) return {MatchResult::Status::Ambiguous, 0};
  return {MatchResult::Status::Match, hits[0]};
}

}  // namespace mpap
