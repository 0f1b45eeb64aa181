#include "ep/scan.hpp"

#include <future>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <openssl/evp.h>

namespace ep {

namespace {

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

std::string payload_of(const ScanState& state) {
  std::string out;
  for (std::size_t i = state.p; i-- > 0;) {
    const Poly& r = state.xn.coeff(i);
    out += "r" + std::to_string(i) + "=" + (r.packed() ? to_hex_form(r) : to_machine(r)) + "\n";
  }
  return out;
}

std::uint64_t header_number(std::string_view header, std::string_view key) {
  const std::string needle = " " + std::string(key) + "=";
  const std::size_t pos = header.find(needle);
  if (pos == std::string_view::npos) throw CorruptCheckpoint("checkpoint header lacks " + std::string(key));
  std::size_t i = pos + needle.size();
  std::uint64_t v = 0;
  std::size_t digits = 0;
  while (i < header.size() && header[i] >= '0' && header[i] <= '9') {
    v = v * 10 + static_cast<std::uint64_t>(header[i] - '0');
    ++i;
    ++digits;
  }
  if (digits == 0 || digits > 19) throw CorruptCheckpoint("bad " + std::string(key) + " in checkpoint header");
  return v;
}

struct BlockResult {
  std::vector<std::uint64_t> e;     // per n; unused for n divisible by p
  std::optional<ArtinSchreierRemainder> end;  // x^(last + 1)
};

BlockResult run_block(std::uint32_t p, std::uint64_t first, std::uint64_t last, ArtinSchreierRemainder xn,
                      bool early_exit) {
  BlockResult out;
  out.e.reserve(last - first + 1);
  for (std::uint64_t n = first; n <= last; ++n) {
    if (n % p == 0) {
      out.e.push_back(0);
    } else {
      const Poly g = coefficient_gcd_of_xn_minus_one(xn, early_exit);
      out.e.push_back(static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(g.degree()));
    }
    xn.multiply_by_x();
  }
  out.end = std::move(xn);
  return out;
}

}  // namespace

std::string serialize_checkpoint(const ScanState& state) {
  if (state.xn.p() != state.p) throw std::invalid_argument("checkpoint state has mismatched p");
  const std::string payload = payload_of(state);
  return "EPSCAN v1 p=" + std::to_string(state.p) + " n=" + std::to_string(state.n) + " sha256=" +
         sha256_hex(payload) + "\n" + payload;
}

ScanState parse_checkpoint(std::string_view text) {
  const std::size_t nl = text.find('\n');
  if (nl == std::string_view::npos) throw CorruptCheckpoint("checkpoint has no header line");
  const std::string_view header = text.substr(0, nl);
  const std::string_view payload = text.substr(nl + 1);
  if (!header.starts_with("EPSCAN ")) throw CorruptCheckpoint("not a scan checkpoint");
  if (!header.starts_with("EPSCAN v1 ")) throw CorruptCheckpoint("unsupported checkpoint version");
  const std::uint64_t p = header_number(header, "p");
  const std::uint64_t n = header_number(header, "n");
  const std::size_t hpos = header.find(" sha256=");
  if (hpos == std::string_view::npos) throw CorruptCheckpoint("checkpoint header lacks sha256");
  const std::string_view hash = header.substr(hpos + 8);
  if (hash != sha256_hex(payload)) throw CorruptCheckpoint("checkpoint hash mismatch");
  if (p < 2 || p >= kPrimeBound || !is_prime_u64(p)) throw CorruptCheckpoint("checkpoint p is not a supported prime");
  if (n < 1) throw CorruptCheckpoint("checkpoint n must be positive");

  std::vector<Poly> coeffs(p, Poly::zero(prime_field(static_cast<std::uint32_t>(p))));
  std::istringstream lines{std::string(payload)};
  std::string line;
  for (std::size_t i = p; i-- > 0;) {
    if (!std::getline(lines, line)) throw CorruptCheckpoint("checkpoint payload truncated");
    const std::string prefix = "r" + std::to_string(i) + "=";
    if (!line.starts_with(prefix)) throw CorruptCheckpoint("unexpected checkpoint line: " + line);
    try {
      coeffs[i] = parse_machine(std::string_view(line).substr(prefix.size()));
    } catch (const std::invalid_argument& ex) {
      throw CorruptCheckpoint(std::string("bad polynomial in checkpoint: ") + ex.what());
    }
    if (coeffs[i].field()->p() != p || coeffs[i].field()->k() != 1) {
      throw CorruptCheckpoint("checkpoint polynomial over the wrong field");
    }
  }
  if (std::getline(lines, line)) throw CorruptCheckpoint("trailing data in checkpoint");
  const auto pp = static_cast<std::uint32_t>(p);
  return ScanState{pp, n, ArtinSchreierRemainder(pp, std::move(coeffs))};
}

void scan(const ScanOptions& options, const RecordSink& sink, const CheckpointSink& on_checkpoint,
          const std::optional<ScanState>& resume) {
  const std::uint32_t p = options.p;
  if (p < 2 || p >= kPrimeBound || !is_prime_u64(p)) throw std::invalid_argument("scan needs a prime p below 2^16");
  if (options.from < 1 || options.from > options.to) throw std::invalid_argument("scan needs 1 <= from <= to");
  if (options.workers < 1) throw std::invalid_argument("scan needs at least one worker");
  if (options.checkpoint_interval < 1) throw std::invalid_argument("checkpoint interval must be positive");

  std::uint64_t start = options.from;
  std::optional<ArtinSchreierRemainder> carried;
  if (resume) {
    if (resume->p != p) throw CorruptCheckpoint("checkpoint was written for a different prime");
    if (resume->n < options.from || resume->n > options.to + 1) {
      throw CorruptCheckpoint("checkpoint position lies outside the requested range");
    }
    start = resume->n;
    carried = resume->xn;
  }
  if (start > options.to) return;
  if (!carried) carried = reduce_xn(to_big(start), p);

  std::unordered_map<std::uint64_t, std::uint64_t> e_cache;  // coprime n in [start, current)
  auto e_of = [&](std::uint64_t n) -> std::uint64_t {
    const std::uint64_t m = coprime_part(n, p);
    if (auto it = e_cache.find(m); it != e_cache.end()) return it->second;
    return e_value(to_big(m), p);
  };
  const MembershipOracle oracle = [&](std::uint64_t d) { return e_of(d) > 0; };

  const std::uint64_t interval = options.checkpoint_interval;
  // Block boundaries are anchored at `from`, so checkpoints land on the same
  // n whatever the worker count or resume point.
  auto block_end = [&](std::uint64_t first) {
    const std::uint64_t offset = (first - options.from) / interval;
    const std::uint64_t boundary = options.from + (offset + 1) * interval - 1;
    return std::min(boundary, options.to);
  };

  std::uint64_t next = start;
  while (next <= options.to) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    std::uint64_t cursor = next;
    for (unsigned w = 0; w < options.workers && cursor <= options.to; ++w) {
      const std::uint64_t last = block_end(cursor);
      ranges.emplace_back(cursor, last);
      cursor = last + 1;
    }
    std::vector<BlockResult> results(ranges.size());
    if (ranges.size() == 1) {
      results[0] = run_block(p, ranges[0].first, ranges[0].second, *carried, options.early_exit);
    } else {
      std::vector<std::future<BlockResult>> futures;
      for (std::size_t i = 0; i < ranges.size(); ++i) {
        const auto [first, last] = ranges[i];
        futures.push_back(std::async(std::launch::async, [&, i, first, last] {
          ArtinSchreierRemainder seed = i == 0 ? *carried : reduce_xn(to_big(first), p);
          return run_block(p, first, last, std::move(seed), options.early_exit);
        }));
      }
      for (std::size_t i = 0; i < futures.size(); ++i) results[i] = futures[i].get();
    }

    for (std::size_t b = 0; b < ranges.size(); ++b) {
      const auto [first, last] = ranges[b];
      for (std::uint64_t n = first; n <= last; ++n) {
        MembershipRecord rec;
        rec.n = n;
        rec.p = p;
        if (n % p == 0) {
          rec.delegated = true;
          rec.e = e_of(n);
        } else {
          rec.e = results[b].e[n - first];
          e_cache.emplace(n, rec.e);
        }
        rec.member = rec.e > 0;
        if (options.classify) classify_record(rec, oracle);
        sink(rec);
      }
      carried = std::move(results[b].end);
      if (on_checkpoint && (last == options.to || (last + 1 - options.from) % interval == 0)) {
        on_checkpoint(ScanState{p, last + 1, *carried});
      }
    }
    next = cursor;
  }
}

}  // namespace ep
