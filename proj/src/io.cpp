#include "hlpp/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ctime>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace hlpp {

std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) os.put(',');
    os << csv_quote(fields[i]);
  }
  os << "\r\n";
}

CsvError::CsvError(int line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

namespace {

struct RawCsv {
  std::vector<std::vector<std::string>> records;
  std::vector<int> lines;  // starting line of each record
};

RawCsv parse_records(std::string_view text) {
  RawCsv out;
  std::vector<std::string> rec;
  std::string field;
  bool quoted = false;        // inside a quoted field
  bool field_quoted = false;  // current field was opened with a quote
  bool rec_content = false;   // record has more than one bare empty field
  int line = 1, rec_line = 1, quote_line = 1;

  auto end_field = [&] {
    rec_content = rec_content || !rec.empty() || !field.empty() || field_quoted;
    rec.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    if (rec_content) {
      out.records.push_back(std::move(rec));
      out.lines.push_back(rec_line);
    }
    rec.clear();
    rec_content = false;
    rec_line = line;
  };

  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted)
          throw CsvError(line, "quote inside an unquoted field");
        quoted = true;
        field_quoted = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] != '\n')
          throw CsvError(line, "bare carriage return");
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        if (field_quoted) throw CsvError(line, "data after a closing quote");
        field.push_back(c);
    }
  }
  if (quoted) throw CsvError(quote_line, "unterminated quoted field");
  end_record();
  return out;
}

}  // namespace

std::vector<std::vector<std::string>> csv_parse(std::string_view text) {
  return parse_records(text).records;
}

std::vector<double> csv_samples(std::string_view text) {
  RawCsv raw = parse_records(text);
  std::vector<double> out;
  bool header_allowed = true;
  for (size_t k = 0; k < raw.records.size(); ++k) {
    const std::string& f = raw.records[k].front();
    if (!f.empty() && f[0] == '#') continue;
    const char* s = f.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    while (end && *end == ' ') ++end;
    if (end == s || (end && *end != '\0')) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw CsvError(raw.lines[k], "not a number: \"" + f + "\"");
    }
    header_allowed = false;
    out.push_back(v);
  }
  return out;
}

namespace {

inline uint32_t rotl32(uint32_t v, int s) { return (v << s) | (v >> (32 - s)); }

struct Sha1 {
  uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};
  uint64_t total = 0;
  unsigned char buf[64];
  size_t fill = 0;

  void block(const unsigned char* p) {
    uint32_t w[80];
    for (int i = 0; i < 16; ++i)
      w[i] = uint32_t(p[4 * i]) << 24 | uint32_t(p[4 * i + 1]) << 16 |
             uint32_t(p[4 * i + 2]) << 8 | uint32_t(p[4 * i + 3]);
    for (int i = 16; i < 80; ++i)
      w[i] = rotl32(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);
    uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
    for (int i = 0; i < 80; ++i) {
      uint32_t f, k;
      if (i < 20) {
        f = (b & c) | (~b & d);
        k = 0x5A827999u;
      } else if (i < 40) {
        f = b ^ c ^ d;
        k = 0x6ED9EBA1u;
      } else if (i < 60) {
        f = (b & c) | (b & d) | (c & d);
        k = 0x8F1BBCDCu;
      } else {
        f = b ^ c ^ d;
        k = 0xCA62C1D6u;
      }
      uint32_t tmp = rotl32(a, 5) + f + e + k + w[i];
      e = d;
      d = c;
      c = rotl32(b, 30);
      b = a;
      a = tmp;
    }
    h[0] += a;
    h[1] += b;
    h[2] += c;
    h[3] += d;
    h[4] += e;
  }

  void update(const unsigned char* p, size_t n) {
    total += n;
    while (n > 0) {
      size_t take = std::min(n, sizeof(buf) - fill);
      std::memcpy(buf + fill, p, take);
      fill += take;
      p += take;
      n -= take;
      if (fill == sizeof(buf)) {
        block(buf);
        fill = 0;
      }
    }
  }

  std::string hex() {
    uint64_t bits = total * 8;
    unsigned char pad = 0x80;
    update(&pad, 1);
    unsigned char zero = 0;
    while (fill != 56) update(&zero, 1);
    unsigned char len[8];
    for (int i = 0; i < 8; ++i) len[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
    update(len, 8);
    std::string out(40, '0');
    static const char* digits = "0123456789abcdef";
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 8; ++j) out[8 * i + j] = digits[(h[i] >> (28 - 4 * j)) & 0xF];
    return out;
  }
};

}  // namespace

std::string sha1_hex(std::string_view bytes) {
  Sha1 s;
  s.update(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
  return s.hex();
}

std::string git_blob_hash(std::string_view bytes) {
  Sha1 s;
  std::string head = "blob " + std::to_string(bytes.size());
  head.push_back('\0');
  s.update(reinterpret_cast<const unsigned char*>(head.data()), head.size());
  s.update(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
  return s.hex();
}

void write_pgm(std::ostream& os, const PlanePartition& pp, int maxh,
               const std::vector<std::string>& comments) {
  os << "P2\n";
  for (const std::string& c : comments) os << "# " << c << "\n";
  os << pp.cols << " " << pp.rows << "\n" << maxh << "\n";
  for (int i = 1; i <= pp.rows; ++i) {
    std::string row;
    for (int j = 1; j <= pp.cols; ++j) {
      std::string tok = std::to_string(pp.at(i, j));
      if (!row.empty() && row.size() + 1 + tok.size() > 70) {
        os << row << "\n";
        row.clear();
      }
      if (!row.empty()) row.push_back(' ');
      row += tok;
    }
    os << row << "\n";
  }
}

std::string iso8601_utc_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char out[32];
  std::strftime(out, sizeof(out), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return out;
}

int thread_cap() {
  if (const char* env = std::getenv("HLPP_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(std::min(v, 256L));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (!in.good() && !in.eof()) throw std::runtime_error("cannot read " + path);
  return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::string tmp = path + ".tmp~";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out.good()) {
      std::remove(tmp.c_str());
      throw std::runtime_error("cannot write " + tmp);
    }
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

Checkpoint Checkpoint::of(const GlauberChain& chain) {
  Checkpoint c;
  c.params = chain.params();
  c.iter = chain.iter();
  c.rng_counter = chain.rng_counter();
  c.heights = chain.heights().h;
  return c;
}

std::string Checkpoint::to_json(std::string_view manifest_name) const {
  nlohmann::json j;
  j["version"] = version;
  j["n"] = params.n;
  j["r"] = params.r;
  j["t"] = params.t;
  j["seed"] = params.seed;
  j["iter"] = std::to_string(iter);
  j["rng_state"] = {{"stream", params.stream}, {"counter", rng_counter}};
  j["heights"] = heights;
  if (!manifest_name.empty()) j["manifest"] = std::string(manifest_name);
  return j.dump();
}

Checkpoint Checkpoint::from_json(std::string_view text) {
  Checkpoint c;
  try {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("version").get<int>() != 1) throw std::runtime_error("unsupported version");
    c.params.n = j.at("n").get<int>();
    c.params.r = j.at("r").get<double>();
    c.params.t = j.at("t").get<double>();
    c.params.seed = j.at("seed").get<uint64_t>();
    c.params.stream = j.at("rng_state").at("stream").get<uint64_t>();
    c.rng_counter = j.at("rng_state").at("counter").get<uint64_t>();
    c.iter = std::stoull(j.at("iter").get<std::string>());
    c.heights = j.at("heights").get<std::vector<int>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("checkpoint: ") + e.what());
  } catch (const std::logic_error& e) {
    throw std::runtime_error(std::string("checkpoint: ") + e.what());
  }
  c.params.validate();
  if (c.heights.size() != static_cast<size_t>(c.params.n) * c.params.n)
    throw std::runtime_error("checkpoint: heights array does not match n*n");
  return c;
}

GlauberChain Checkpoint::restore() const {
  GlauberChain chain(params);
  PlanePartition pp(params.n, params.n);
  pp.h = heights;
  chain.restore(pp, iter, rng_counter);
  return chain;
}

}  // namespace hlpp
