#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpap/series.hpp"

namespace mpap {

// A reference sequence, either compiled in or pulled from its b-file.
struct SequenceRef {
  std::string id;  // canonical form: 'A' plus six digits
  std::vector<Int> terms;
  enum class Source { Embedded, Fetched } source = Source::Embedded;
  std::optional<std::string> fetched_at;  // ISO 8601 UTC, fetched data only
};

enum class OeisErrorKind { UnknownSequence, NetworkDisabled, FetchFailed, ParseError };

struct OeisError : std::runtime_error {
  OeisErrorKind kind;
  // HTTP status for FetchFailed, 1-based line number for ParseError
  int extra;
  OeisError(OeisErrorKind k, const std::string& msg, int extra_ = 0)
      : std::runtime_error(msg), kind(k), extra(extra_) {}
};

std::vector<std::string> embedded_ids();

// Embedded table first, then the on-disk cache (OEIS_CACHE_DIR), then the
// network unless MAP_OFFLINE=1 is set.
SequenceRef load_reference(const std::string& id);

// Unconditionally fetch the sequence's b-file (honoring MAP_OFFLINE and
// OEIS_BASE_URL) and cache it atomically when a cache directory is
// configured. Lines starting with '#' are comments; every other line must
// be an "index value" pair.
SequenceRef fetch_bfile(const std::string& id);

// Parse b-file text; exposed for tests.
std::vector<Int> parse_bfile(const std::string& text);

// Alignment of a computed sequence against a reference: find the unique
// shift s with |s| <= max_shift such that computed[i] == ref[i+s] across the
// whole overlap, requiring at least 8 overlapping terms.
struct MatchResult {
  enum class Status { Match, NoMatch, Ambiguous, OverlapTooShort } status;
  int shift = 0;
};
MatchResult match_shift(const std::vector<Int>& computed, const SequenceRef& ref,
                        int max_shift = 3);

}  // namespace mpap
