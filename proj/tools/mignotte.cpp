// Command-line front end for the construction and the threshold scheme:
// seed generation, moduli construction, property verification, secret
// splitting and recombination, and the growth/gap CSV reports.
//
// Exit codes: 0 success, 1 domain failure (invalid input values, failed
// checks, unreadable files), 2 usage error (unparseable flags). Machine
// output goes to standard output, diagnostics to the error stream, and
// secret values never appear in diagnostics.

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mignotte/mignotte.hpp"

namespace {

using mignotte::Int;
using mignotte::Rational;

// Usage problems the flag parser cannot see (malformed composite values,
// missing cross-flag requirements). Reported like flag errors: exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw mignotte::Error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw mignotte::Error("cannot write " + path.string());
}

bool looks_like_number_list(const std::string& text) {
  if (text.empty()) return false;
  return std::all_of(text.begin(), text.end(), [](unsigned char c) {
    return std::isdigit(c) || c == ',';
  });
}

std::vector<Int> parse_comma_list(const std::string& text) {
  std::vector<Int> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    values.push_back(mignotte::parse_natural(token));
  }
  if (values.empty()) throw mignotte::Error("empty sequence");
  return values;
}

// Whitespace-separated naturals, the format cmd_seed emits.
std::vector<Int> parse_term_file(const std::string& text) {
  std::vector<Int> values;
  std::istringstream in(text);
  std::string token;
  while (in >> token) values.push_back(mignotte::parse_natural(token));
  if (values.empty()) throw mignotte::Error("empty sequence");
  return values;
}

std::vector<Int> load_moduli_arg(const std::string& arg) {
  if (looks_like_number_list(arg)) return parse_comma_list(arg);
  return mignotte::load_moduli_file(read_file(arg)).moduli.moduli();
}

// "num" or "num/den", both decimal.
Rational parse_ratio(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(mignotte::parse_natural(text));
  return Rational(mignotte::parse_natural(text.substr(0, slash)),
                  mignotte::parse_natural(text.substr(slash + 1)));
}

// "--secret 1234" or "--secret @path"; file contents map big-endian to
// an integer.
Int parse_secret_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    Int value = 0;
    for (unsigned char byte : read_file(arg.substr(1))) {
      value <<= 8;
      value += byte;
    }
    return value;
  }
  return mignotte::parse_natural(arg);
}

std::string to_big_endian_bytes(Int value) {
  std::string bytes;
  while (value > 0) {
    bytes.push_back(static_cast<char>(static_cast<unsigned>(value & 0xff)));
    value >>= 8;
  }
  std::reverse(bytes.begin(), bytes.end());
  return bytes;
}

std::string join(const std::vector<Int>& values, char separator) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out.push_back(separator);
    out += values[i].str();
  }
  return out;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

struct SeedArgs {
  std::string q1;
  std::size_t n = 0;
  std::string out;
};

void cmd_seed(const SeedArgs& args) {
  if (args.n < 3) throw mignotte::Error("n must be ≥ 3");
  mignotte::SeedSequence seed =
      mignotte::sylvester_seed(mignotte::parse_natural(args.q1), args.n);
  std::string line = join(seed.terms(), ' ') + "\n";
  emit(args.out, line);
}

struct ConstructArgs {
  std::string seed;
  std::string t = "1";
  std::string t_limit = "1000000";
  std::optional<std::size_t> k_hint;
  std::string out;
};

void cmd_construct(const ConstructArgs& args) {
  std::vector<Int> terms = looks_like_number_list(args.seed)
                               ? parse_comma_list(args.seed)
                               : parse_term_file(read_file(args.seed));
  mignotte::SeedSequence seed = mignotte::validate_seed(terms);
  Int t = mignotte::parse_natural(args.t);
  Int limit = mignotte::parse_natural(args.t_limit);
  if (t > limit)
    throw mignotte::Error("iteration count exceeds limit (" + limit.str() +
                          ")");
  mignotte::MignotteModuli moduli = mignotte::construct(seed, t);
  std::cout << "P=" << moduli.shift_product().str() << "\n"
            << "t=" << moduli.iterations().str() << "\n"
            << "moduli=" << join(moduli.moduli(), ',') << "\n";
  if (!args.out.empty())
    write_file(args.out, mignotte::write_moduli_file(moduli, args.k_hint));
}

struct VerifyArgs {
  std::string moduli;
  std::string k;
  std::string warn_threshold = "1";
};

void cmd_verify(const VerifyArgs& args) {
  std::vector<Int> moduli = load_moduli_arg(args.moduli);
  Rational warn_below = parse_ratio(args.warn_threshold);

  for (std::size_t i = 0; i + 1 < moduli.size(); ++i) {
    if (moduli[i] >= moduli[i + 1]) throw mignotte::Error("not increasing");
  }
  if (auto pair = mignotte::find_noncoprime_pair(moduli)) {
    throw mignotte::Error("not coprime: (" + pair->first.str() + "," +
                          pair->second.str() + ")");
  }
  std::cout << "pairwise coprime: ok\n";

  std::vector<std::size_t> thresholds;
  if (args.k == "all") {
    if (moduli.size() < 3) throw mignotte::Error("k must satisfy 1 < k < n");
    for (std::size_t k = 2; k + 1 <= moduli.size(); ++k)
      thresholds.push_back(k);
  } else {
    std::size_t k = 0;
    try {
      k = static_cast<std::size_t>(std::stoull(args.k));
    } catch (const std::exception&) {
      throw UsageError("--k expects a count or \"all\"");
    }
    thresholds.push_back(k);
  }

  for (std::size_t k : thresholds) {
    mignotte::Bounds b = mignotte::bounds(moduli, k);
    if (b.upper <= b.lower) {
      throw mignotte::Error("Mignotte condition fails: " + b.upper.str() +
                            " ≤ " + b.lower.str());
    }
    std::cout << "k=" << k << ": M=" << b.upper.str() << " N=" << b.lower.str()
              << " ratio=" << b.gap_ratio.str() << "\n";
    if (b.gap_ratio < warn_below) {
      std::cerr << "warning: k=" << k << " gap ratio " << b.gap_ratio.str()
                << " below threshold " << args.warn_threshold << "\n";
    }
  }
}

struct SplitArgs {
  std::string secret;
  std::string moduli;
  std::optional<std::size_t> k;
  std::string out_dir = ".";
};

void cmd_split(const SplitArgs& args) {
  mignotte::ModuliFile file =
      mignotte::load_moduli_file(read_file(args.moduli));
  std::optional<std::size_t> k = args.k ? args.k : file.k_hint;
  if (!k)
    throw UsageError("no threshold: pass --k or use a moduli file with k_hint");
  mignotte::SchemeParams params(file.moduli, *k);
  std::vector<mignotte::Share> shares =
      mignotte::split(mignotte::Secret{parse_secret_arg(args.secret)}, params);
  std::filesystem::path dir(args.out_dir);
  std::filesystem::create_directories(dir);
  for (const mignotte::Share& share : shares) {
    write_file(dir / ("share_" + std::to_string(share.index) + ".json"),
               mignotte::serialize_share(share, params.n(), params.k()));
  }
  std::cout << "scheme_id=" << params.scheme_id() << "\n";
}

struct CombineArgs {
  std::vector<std::string> shares;
  std::string moduli;
  bool bytes = false;
};

void cmd_combine(const CombineArgs& args) {
  // Parse every file, dropping byte-identical duplicates of the same
  // share so that listing a file twice is harmless.
  std::vector<mignotte::ParsedShare> parsed;
  for (const std::string& path : args.shares) {
    mignotte::ParsedShare next = mignotte::parse_share(read_file(path));
    bool seen = std::any_of(
        parsed.begin(), parsed.end(), [&](const mignotte::ParsedShare& p) {
          return p.share == next.share && p.n == next.n && p.k == next.k;
        });
    if (!seen) parsed.push_back(std::move(next));
  }

  const mignotte::ParsedShare& first = parsed.front();
  for (const mignotte::ParsedShare& p : parsed) {
    if (p.share.scheme_id != first.share.scheme_id || p.n != first.n ||
        p.k != first.k) {
      throw mignotte::Error("scheme mismatch");
    }
  }
  if (parsed.size() < first.k) {
    throw mignotte::Error(
        "insufficient shares: have " + std::to_string(parsed.size()) +
        ", need " + std::to_string(first.k));
  }

  Int secret;
  if (!args.moduli.empty()) {
    mignotte::ModuliFile file =
        mignotte::load_moduli_file(read_file(args.moduli));
    mignotte::SchemeParams params(file.moduli, first.k);
    if (params.scheme_id() != first.share.scheme_id)
      throw mignotte::Error("scheme mismatch");
    std::vector<mignotte::Share> shares;
    for (const mignotte::ParsedShare& p : parsed) shares.push_back(p.share);
    secret = mignotte::reconstruct(shares, params).value;
  } else {
    // Without the full moduli the exact range (N, M) is unknown, but
    // sound partial bounds follow from the shares alone: M is at most
    // the product of the k smallest provided moduli, and N at least the
    // product of the k-1 largest provided ones.
    std::map<std::size_t, const mignotte::Share*> by_index;
    std::vector<mignotte::ResiduePair> pairs;
    std::vector<Int> moduli;
    for (const mignotte::ParsedShare& p : parsed) {
      if (!by_index.emplace(p.share.index, &p.share).second)
        throw mignotte::Error("duplicate share index");
      pairs.push_back({p.share.residue, p.share.modulus});
      moduli.push_back(p.share.modulus);
    }
    secret = mignotte::crt_combine(pairs).residue;
    std::sort(moduli.begin(), moduli.end());
    Int upper = 1;
    for (std::size_t i = 0; i < first.k; ++i) upper *= moduli[i];
    Int lower = 1;
    for (std::size_t i = moduli.size() - (first.k - 1); i < moduli.size(); ++i)
      lower *= moduli[i];
    if (secret <= lower || secret >= upper)
      throw mignotte::Error("inconsistent or tampered shares");
  }

  if (args.bytes) {
    std::cout << to_big_endian_bytes(secret);
  } else {
    std::cout << secret.str() << "\n";
  }
}

struct AnalyzeArgs {
  std::string mode;
  std::string q1;
  std::string n_range;
  std::string seed;
  std::size_t k = 0;
  std::string t_list;
  std::string out;
};

// "a..b" or a single "a".
std::pair<std::size_t, std::size_t> parse_length_range(const std::string& text) {
  std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t n = std::stoull(text);
      return {n, n};
    }
    return {std::stoull(text.substr(0, dots)),
            std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--n expects a length or a range like 3..8");
  }
}

void cmd_analyze(const AnalyzeArgs& args) {
  std::ostringstream csv;
  if (args.mode == "p-growth") {
    if (args.q1.empty() || args.n_range.empty())
      throw UsageError("p-growth mode needs --q1 and --n");
    auto [n_min, n_max] = parse_length_range(args.n_range);
    mignotte::write_p_growth_csv(
        csv,
        mignotte::p_growth_table(mignotte::parse_natural(args.q1), n_min,
                                 n_max));
  } else if (args.mode == "gap") {
    if (args.seed.empty() || args.k == 0 || args.t_list.empty())
      throw UsageError("gap mode needs --seed, --k and --t");
    mignotte::write_gap_csv(
        csv, mignotte::gap_table(
                 mignotte::validate_seed(parse_comma_list(args.seed)), args.k,
                 parse_comma_list(args.t_list)));
  } else {
    throw UsageError("unknown mode: " + args.mode);
  }
  emit(args.out, csv.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Threshold secret sharing over directly constructed coprime moduli"};
  app.require_subcommand(1);

  SeedArgs seed_args;
  CLI::App* seed = app.add_subcommand(
      "seed", "Generate a pairwise coprime seed sequence");
  seed->add_option("--q1", seed_args.q1, "First term (decimal)")->required();
  seed->add_option("--n", seed_args.n, "Number of terms")->required();
  seed->add_option("--out", seed_args.out,
                   "Write the terms to a file instead of standard output");
  seed->callback([&] { cmd_seed(seed_args); });

  ConstructArgs construct_args;
  CLI::App* construct = app.add_subcommand(
      "construct", "Shift a seed sequence into Mignotte moduli");
  construct
      ->add_option("--seed", construct_args.seed,
                   "Comma-separated terms, or a file of terms")
      ->required();
  construct->add_option("--t", construct_args.t, "Shift multiplier (default 1)");
  construct->add_option("--t-limit", construct_args.t_limit,
                        "Refuse multipliers above this cap");
  construct->add_option("--k", construct_args.k_hint,
                        "Record a threshold hint in the output file");
  construct->add_option("--out", construct_args.out,
                        "Write a moduli file with provenance");
  construct->callback([&] { cmd_construct(construct_args); });

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Check coprimality and the threshold condition");
  verify
      ->add_option("--moduli", verify_args.moduli,
                   "Comma-separated moduli, or a moduli file")
      ->required();
  verify->add_option("--k", verify_args.k, "Threshold to check, or \"all\"")
      ->required();
  verify->add_option("--warn-threshold", verify_args.warn_threshold,
                     "Warn when the gap ratio falls below this value");
  verify->callback([&] { cmd_verify(verify_args); });

  SplitArgs split_args;
  CLI::App* split =
      app.add_subcommand("split", "Split a secret into residue shares");
  split
      ->add_option("--secret", split_args.secret,
                   "Decimal value, or @file for raw bytes")
      ->required();
  split->add_option("--moduli", split_args.moduli, "Moduli file")->required();
  split->add_option("--k", split_args.k,
                    "Threshold (defaults to the file's k_hint)");
  split->add_option("--out-dir", split_args.out_dir,
                    "Directory for share_<i>.json files");
  split->callback([&] { cmd_split(split_args); });

  CombineArgs combine_args;
  CLI::App* combine =
      app.add_subcommand("combine", "Reconstruct a secret from share files");
  combine->add_option("--shares", combine_args.shares, "Share files")
      ->required();
  combine->add_option("--moduli", combine_args.moduli,
                      "Moduli file for the full range check");
  combine->add_flag("--bytes", combine_args.bytes,
                    "Write the secret as raw big-endian bytes");
  combine->callback([&] { cmd_combine(combine_args); });

  AnalyzeArgs analyze_args;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Emit growth or gap-ratio CSV tables");
  analyze->add_option("--mode", analyze_args.mode, "p-growth or gap")
      ->required();
  analyze->add_option("--q1", analyze_args.q1, "First seed term (p-growth)");
  analyze->add_option("--n", analyze_args.n_range,
                      "Length range like 3..8 (p-growth)");
  analyze->add_option("--seed", analyze_args.seed,
                      "Comma-separated seed terms (gap)");
  analyze->add_option("--k", analyze_args.k, "Threshold (gap)");
  analyze->add_option("--t", analyze_args.t_list,
                      "Comma-separated shift multipliers (gap)");
  analyze->add_option("--out", analyze_args.out,
                      "Write the CSV to a file instead of standard output");
  analyze->callback([&] { cmd_analyze(analyze_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mignotte::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
