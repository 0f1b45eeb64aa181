#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ep/nset.hpp"

namespace ep {

/// Resumable scanner state: the remainder of x^n, n being the next exponent
/// whose record has not been emitted yet.
struct ScanState {
  std::uint32_t p;
  std::uint64_t n;
  ArtinSchreierRemainder xn;
};

class CorruptCheckpoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kCheckpointInterval = 256;

/// "EPSCAN v1 p=<p> n=<n> sha256=<hex>" followed by one line per coefficient,
/// r_{p-1} first, each "r<i>=<machine polynomial>".
std::string serialize_checkpoint(const ScanState& state);
ScanState parse_checkpoint(std::string_view text);

struct ScanOptions {
  std::uint32_t p = 2;
  std::uint64_t from = 1;
  std::uint64_t to = 1;
  bool classify = false;
  bool early_exit = false;
  unsigned workers = 1;
  std::uint64_t checkpoint_interval = kCheckpointInterval;
};

using RecordSink = std::function<void(const MembershipRecord&)>;
using CheckpointSink = std::function<void(const ScanState&)>;

/// Emits one record per n in [from, to] in increasing order. The checkpoint
/// sink is called with the state for the next n whenever that n - from is a
/// multiple of checkpoint_interval, and once more after the last record
/// (n = to + 1). When resume is given, scanning starts at resume->n instead
/// of options.from.
void scan(const ScanOptions& options, const RecordSink& sink, const CheckpointSink& on_checkpoint = {},
          const std::optional<ScanState>& resume = std::nullopt);

}  // namespace ep
