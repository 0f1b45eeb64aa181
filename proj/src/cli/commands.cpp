#include "ep/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ep/element.hpp"
#include "ep/frobenius.hpp"
#include "ep/matrixper.hpp"
#include "ep/nset.hpp"
#include "ep/period.hpp"
#include "ep/records.hpp"
#include "ep/scan.hpp"

namespace ep::cli {

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json big_json(const BigInt& v) {
  if (fits_u64(v)) return Json(to_u64(v));
  return Json(v.get_str());
}

BigInt parse_positive(const std::string& text, const char* what) {
  BigInt v;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || v.set_str(text, 10) != 0) {
    throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
  }
  if (v < 1) throw UsageError(std::string(what) + " must be at least 1");
  return v;
}

std::uint64_t parse_positive_u64(const std::string& text, const char* what) {
  const BigInt v = parse_positive(text, what);
  if (!fits_u64(v)) throw UsageError(std::string(what) + " does not fit in 64 bits");
  return to_u64(v);
}

std::uint32_t checked_prime(std::uint64_t p) {
  if (p < 2 || p >= kPrimeBound || !is_prime_u64(p)) {
    throw UsageError("--prime must be a prime below 65536, got " + std::to_string(p));
  }
  return static_cast<std::uint32_t>(p);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomically(const fs::path& path, const std::string& text) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("cannot write " + tmp.string());
    o << text;
    o.flush();
    if (!o) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

// ---- check / classify ------------------------------------------------------

int cmd_check(const std::string& n_text, std::uint64_t prime, bool status_from_membership, std::ostream& out) {
  const std::uint32_t p = checked_prime(prime);
  const std::uint64_t n = parse_positive_u64(n_text, "n");
  const MembershipRecord r = classify(n, p);
  out << record_to_json(r) << "\n";
  if (!status_from_membership) return kOk;
  return r.member ? kOk : kNonmember;
}

// ---- scan ------------------------------------------------------------------

struct ScanArgs {
  std::uint64_t prime = 2;
  std::uint64_t from = 1;
  std::uint64_t to = 0;
  std::string out;
  std::string format = "jsonl";
  std::string checkpoint;
  unsigned workers = 1;
  bool early_exit = false;
  bool classify = false;
};

std::uint64_t record_n(const std::string& line, bool csv) {
  return csv ? record_from_csv(line).n : record_from_json(line).n;
}

// Keeps the header and every complete record with n < limit; returns the
// number of records kept.
std::uint64_t truncate_output(const fs::path& path, std::uint64_t limit, bool csv) {
  std::string kept;
  std::uint64_t count = 0;
  if (csv) kept = csv_header() + "\n";
  if (fs::exists(path)) {
    const std::string text = read_file(path);
    std::size_t pos = 0;
    bool first = true;
    while (pos < text.size()) {
      const std::size_t nl = text.find('\n', pos);
      if (nl == std::string::npos) break;  // partial trailing line
      const std::string line = text.substr(pos, nl - pos);
      pos = nl + 1;
      if (first && csv) {
        first = false;
        if (line == csv_header()) continue;
      }
      first = false;
      std::uint64_t n = 0;
      try {
        n = record_n(line, csv);
      } catch (const std::exception&) {
        break;
      }
      if (n >= limit) break;
      kept += line + "\n";
      ++count;
    }
  }
  write_file_atomically(path, kept);
  return count;
}

int cmd_scan(const ScanArgs& a, std::ostream& out, std::ostream& err) {
  const std::uint32_t p = checked_prime(a.prime);
  if (a.from < 1 || a.to < a.from) throw UsageError("scan needs 1 <= --from <= --to");
  if (a.workers < 1) throw UsageError("--workers must be at least 1");
  if (a.format != "jsonl" && a.format != "csv") throw UsageError("--format must be jsonl or csv");
  const bool csv = a.format == "csv";

  ScanOptions options;
  options.p = p;
  options.from = a.from;
  options.to = a.to;
  options.classify = a.classify;
  options.early_exit = a.early_exit;
  options.workers = a.workers;

  std::optional<ScanState> resume;
  if (!a.checkpoint.empty() && fs::exists(a.checkpoint)) {
    resume = parse_checkpoint(read_file(a.checkpoint));
    if (resume->p != p) throw CorruptCheckpoint("checkpoint was written for p=" + std::to_string(resume->p));
    if (resume->n < a.from || resume->n > a.to + 1) {
      throw CorruptCheckpoint("checkpoint position n=" + std::to_string(resume->n) + " lies outside the range");
    }
  }

  std::ofstream file;
  std::ostream* stream = &out;
  if (!a.out.empty()) {
    if (resume) {
      const std::uint64_t kept = truncate_output(a.out, resume->n, csv);
      if (kept != resume->n - a.from) {
        throw CorruptCheckpoint("output file holds " + std::to_string(kept) + " records but the checkpoint expects " +
                                std::to_string(resume->n - a.from));
      }
    } else {
      write_file_atomically(a.out, csv ? csv_header() + "\n" : std::string());
    }
    file.open(a.out, std::ios::binary | std::ios::app);
    if (!file) throw std::runtime_error("cannot open " + a.out);
    stream = &file;
  } else if (csv && !resume) {
    out << csv_header() << "\n";
  }

  auto sink = [&](const MembershipRecord& r) {
    *stream << (csv ? record_to_csv(r) : record_to_json(r)) << "\n";
    if (r.n % 1000 == 0) err << "progress: n=" << r.n << "\n";
  };
  CheckpointSink on_checkpoint;
  if (!a.checkpoint.empty()) {
    on_checkpoint = [&](const ScanState& state) {
      stream->flush();
      if (!*stream) throw std::runtime_error("write to scan output failed");
      write_file_atomically(a.checkpoint, serialize_checkpoint(state));
    };
  }
  scan(options, sink, on_checkpoint, resume);
  stream->flush();
  if (!*stream) throw std::runtime_error("write to scan output failed");
  return kOk;
}

// ---- eset ------------------------------------------------------------------

int cmd_eset(const std::string& n_text, std::uint64_t prime, bool verify, std::ostream& out, std::ostream& err) {
  const std::uint32_t p = checked_prime(prime);
  const BigInt n = parse_positive(n_text, "n");
  if (mpz_divisible_ui_p(n.get_mpz_t(), p)) throw UsageError("eset needs n coprime to p");
  const EsetPolynomial e = eset_polynomial(n, p);
  Json j;
  j["n"] = big_json(n);
  j["p"] = p;
  j["e"] = static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(e.g_of_c.degree());
  j["g"] = to_string(e.g_of_c);
  j["pullback"] = to_string(e.pullback);
  j["pullback_degree"] = e.pullback.degree();
  bool agrees = true;
  if (verify) {
    agrees = direct_gcd(n, p) == e.pullback;
    j["direct_gcd_agrees"] = agrees;
  } else {
    j["direct_gcd_agrees"] = nullptr;
  }
  out << j.dump() << "\n";
  if (!agrees) {
    err << "error: pullback of g(c) differs from the direct gcd\n";
    return kInternal;
  }
  return kOk;
}

// ---- period ----------------------------------------------------------------

int cmd_period(const std::string& text, std::uint64_t prime, unsigned k, std::ostream& out, std::ostream& err) {
  const std::uint32_t p = checked_prime(prime);
  if (k < 1) throw UsageError("--k must be at least 1");
  if (big_pow(p, k) > to_big(kScalarFieldBound)) throw UsageError("coefficient field must have at most 65536 elements");
  const Field field = make_field(p, k);
  const Poly f = parse_poly(text, field);
  const PeriodReport r = poly_period(f);
  const bool certified = certify_period(f, r.period);
  Json j;
  j["f"] = to_string(f);
  j["p"] = p;
  j["k"] = k;
  j["period"] = big_json(r.period);
  j["exponent_multiple"] = big_json(r.exponent_multiple);
  Json profile = Json::array();
  for (const auto& [d, total] : r.ddf_profile) profile.push_back({{"degree", d}, {"total_degree", total}});
  j["ddf_profile"] = profile;
  j["max_multiplicity"] = r.max_multiplicity;
  j["certified"] = certified;
  out << j.dump() << "\n";
  if (!certified) {
    err << "error: period failed certification\n";
    return kInternal;
  }
  return kOk;
}

// ---- frobenius -------------------------------------------------------------

int cmd_frobenius(unsigned k, std::uint64_t n, std::ostream& out, std::ostream& err) {
  if (k < 1 || k > kMaxFrobeniusK) throw UsageError("--k must lie in [1, 16]");
  std::vector<std::uint64_t> ns;
  if (n != 0) {
    if (((std::uint64_t{1} << k) - 1) % n != 0) throw UsageError("--n must divide 2^k - 1");
    ns.push_back(n);
  } else {
    ns = frobenius_divisors(k);
  }
  bool ok = true;
  for (std::uint64_t d : ns) {
    const CharacterReport r = verify_identities(k, d);
    Json j;
    j["k"] = r.k;
    j["q"] = r.q;
    j["n"] = r.n;
    j["coset_reps"] = r.coset_reps;
    j["chi"] = r.chi;
    j["e"] = r.e;
    j["sum_chi2"] = big_json(r.sum_chi2);
    j["sum_chi3"] = r.sum_chi3.get_str();
    j["orthogonality"] = r.orthogonality;
    j["structure_formula"] = r.structure_formula;
    j["cube_bound"] = r.cube_bound;
    j["hypothesis"] = r.hypothesis;
    j["implication"] = r.implication;
    out << j.dump() << "\n";
    if (!r.all_hold()) {
      err << "error: character identities fail for k=" << k << ", n=" << d << "\n";
      ok = false;
    }
  }
  return ok ? kOk : kInternal;
}

// ---- matrix ----------------------------------------------------------------

Coef parse_entry(const std::string& text, const Field& field) {
  const std::string t = text;
  if (!t.empty() && t.find_first_not_of("0123456789") == std::string::npos) {
    const std::uint64_t v = std::stoull(t);
    if (v >= field->scalar_count()) throw UsageError("matrix entry " + t + " out of range");
    return static_cast<Coef>(v);
  }
  const Poly value = parse_poly(t, field->prime_field());
  return FieldElement::from_poly(field, value).scalar();
}

int cmd_matrix(std::uint64_t prime, unsigned s, const std::string& entries, bool allow_degenerate, std::ostream& out,
               std::ostream& err) {
  const std::uint32_t p = checked_prime(prime);
  if (s < 1) throw UsageError("--s must be at least 1");
  if (big_pow(p, s) > to_big(kScalarFieldBound)) throw UsageError("q = p^s must be at most 65536");
  const Field field = make_field(p, s);
  std::vector<std::string> parts;
  std::stringstream ss(entries);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 4) throw UsageError("--entries needs four comma-separated values a,b,c,d");
  Mat2 m{field, parse_entry(parts[0], field), parse_entry(parts[1], field), parse_entry(parts[2], field),
         parse_entry(parts[3], field)};
  if (!m.invertible()) throw UsageError("matrix is singular");
  if (m.b == 0 && !allow_degenerate) throw UsageError("b = 0 makes x a zero divisor; pass --allow-degenerate");
  const MatrixReport r = check_periods(m, allow_degenerate);
  Json j;
  j["p"] = p;
  j["s"] = s;
  j["q"] = r.q;
  j["entries"] = {m.a, m.b, m.c, m.d};
  j["u"] = r.u;
  j["v"] = r.v;
  j["orbit"] = r.orbit;
  j["f"] = to_string(r.f);
  j["frobenius_holds"] = r.frobenius_holds;
  j["period_holds"] = r.period_holds ? Json(*r.period_holds) : Json(nullptr);
  out << j.dump() << "\n";
  const bool ok = r.frobenius_holds && r.period_holds.value_or(true);
  if (!ok) {
    err << "error: period congruences fail for this matrix\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Membership, e-values and periods for orders of nonsingular derivations", "ep"};
  app.require_subcommand(1);

  std::uint64_t prime = 2;
  std::string n_text;

  auto* check = app.add_subcommand("check", "Decide membership of n; exit 0 if member, 1 if not");
  check->add_option("n", n_text, "positive integer")->required();
  check->add_option("--prime,-p", prime, "characteristic")->capture_default_str();

  std::vector<std::string> classify_ns;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one or more n");
  classify_cmd->add_option("n", classify_ns, "positive integers")->required();
  classify_cmd->add_option("--prime,-p", prime, "characteristic")->capture_default_str();

  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a range of n incrementally");
  scan_cmd->add_option("--prime,-p", scan_args.prime, "characteristic")->capture_default_str();
  scan_cmd->add_option("--from", scan_args.from, "first n")->capture_default_str();
  scan_cmd->add_option("--to", scan_args.to, "last n")->required();
  scan_cmd->add_option("--out,-o", scan_args.out, "output file (default: standard output)");
  scan_cmd->add_option("--format", scan_args.format, "jsonl or csv")->capture_default_str();
  scan_cmd->add_option("--checkpoint", scan_args.checkpoint, "checkpoint file; resumed from when present");
  scan_cmd->add_option("--workers", scan_args.workers, "worker threads")->capture_default_str();
  scan_cmd->add_flag("--early-exit", scan_args.early_exit, "stop each gcd chain once it is constant");
  scan_cmd->add_flag("--classify", scan_args.classify, "classify members");

  bool no_verify = false;
  auto* eset_cmd = app.add_subcommand("eset", "Polynomial whose roots form E_p(n)");
  eset_cmd->add_option("n", n_text, "positive integer coprime to p")->required();
  eset_cmd->add_option("--prime,-p", prime, "characteristic")->capture_default_str();
  eset_cmd->add_flag("--no-verify", no_verify, "skip the direct gcd cross-check");

  std::string poly_text;
  unsigned k = 1;
  auto* period_cmd = app.add_subcommand("period", "Period of a polynomial");
  period_cmd->add_option("poly", poly_text, "polynomial, human or machine form")->required();
  period_cmd->add_option("--prime,-p", prime, "characteristic")->capture_default_str();
  period_cmd->add_option("--k", k, "coefficient field F_{p^k}")->capture_default_str();

  unsigned fk = 0;
  std::uint64_t fn = 0;
  auto* frob_cmd = app.add_subcommand("frobenius", "Character identities for F_{2^k} x| U_n");
  frob_cmd->add_option("--k", fk, "field degree")->required();
  frob_cmd->add_option("--n", fn, "divisor of 2^k - 1 (default: all)");

  unsigned s = 1;
  std::string entries;
  bool allow_degenerate = false;
  auto* matrix_cmd = app.add_subcommand("matrix", "Period congruences for c x^(q+1) + d x^q - a x - b");
  matrix_cmd->add_option("--prime,-p", prime, "characteristic")->capture_default_str();
  matrix_cmd->add_option("--s", s, "q = p^s")->capture_default_str();
  matrix_cmd->add_option("--entries", entries, "a,b,c,d as element indices or polynomials in x")->required();
  matrix_cmd->add_flag("--allow-degenerate", allow_degenerate, "accept b = 0 and check x^(q^u) = x only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*check) return cmd_check(n_text, prime, true, out);
    if (*classify_cmd) {
      for (const auto& t : classify_ns) cmd_check(t, prime, false, out);
      return kOk;
    }
    if (*scan_cmd) return cmd_scan(scan_args, out, err);
    if (*eset_cmd) return cmd_eset(n_text, prime, !no_verify, out, err);
    if (*period_cmd) return cmd_period(poly_text, prime, k, out, err);
    if (*frob_cmd) return cmd_frobenius(fk, fn, out, err);
    if (*matrix_cmd) return cmd_matrix(prime, s, entries, allow_degenerate, out, err);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace ep::cli
