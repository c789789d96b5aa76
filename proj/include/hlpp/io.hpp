#pragma once
// File plumbing shared by the command-line driver and the tests: RFC 4180
// CSV reading and writing, plain ASCII PGM heightmaps, git-style content
// hashes, and JSON checkpoints freezing a Glauber chain at a block boundary.

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hlpp/sampler.hpp"

namespace hlpp {

// quote a field when it contains a comma, a quote, or a line break
std::string csv_quote(std::string_view field);
// one record, comma separated, CRLF terminated
void csv_row(std::ostream& os, const std::vector<std::string>& fields);

struct CsvError : std::runtime_error {
  int line;  // 1-based line where the problem was detected
  CsvError(int line_, const std::string& what_);
};

// whole-document CSV parse: quoted fields, embedded separators and line
// breaks, LF or CRLF records.  Blank records are dropped.  Stray quotes and
// an unterminated quoted field throw CsvError.
std::vector<std::vector<std::string>> csv_parse(std::string_view text);

// first field of every record as a double.  One leading non-numeric record
// is accepted as a header, records whose first field starts with '#' are
// skipped, anything else that fails to parse throws CsvError.
std::vector<double> csv_samples(std::string_view text);

// SHA-1 of a byte string, lowercase hex
std::string sha1_hex(std::string_view bytes);
// hash of the git blob object "blob <size>\0" + bytes
std::string git_blob_hash(std::string_view bytes);

// heights as a plain PGM (P2) image, maxval maxh, one image row per base
// row; comments are emitted as '#' lines after the magic.  Lines are kept
// within the format's 70-character limit.
void write_pgm(std::ostream& os, const PlanePartition& pp, int maxh,
               const std::vector<std::string>& comments = {});

std::string iso8601_utc_now();

// HLPP_THREADS when set and positive, else hardware concurrency, else 1
int thread_cap();

// whole-file helpers; std::runtime_error on I/O failure.  Writes go through
// a temporary and a rename so an interrupted write never truncates the
// previous version of the file.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

struct Checkpoint {
  int version = 1;
  GlauberParams params;
  unsigned long long iter = 0;
  uint64_t rng_counter = 0;
  std::vector<int> heights;  // row-major n*n

  static Checkpoint of(const GlauberChain& chain);
  // iter travels as a decimal string so 64-bit counts survive readers that
  // parse every number as a double
  std::string to_json(std::string_view manifest_name = {}) const;
  static Checkpoint from_json(std::string_view text);
  // a chain positioned exactly at the saved block boundary
  GlauberChain restore() const;
};

}  // namespace hlpp
