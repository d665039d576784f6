#pragma once

//! The Mignotte (k,n) threshold scheme over constructed moduli: residue
//! shares, CRT reconstruction with a range check as the tamper signal,
//! and a desk-scale probe that enumerates every secret consistent with a
//! sub-threshold share set.
//!
//! Share file format (one share per file, UTF-8, LF endings, keys in
//! exactly this order):
//!
//!   {
//!     "version": 1,
//!     "scheme": "mignotte",
//!     "scheme_id": "<hex digest>",
//!     "n": 3,
//!     "k": 2,
//!     "index": 1,
//!     "modulus": "3",
//!     "residue": "1"
//!   }
//!
//! modulus and residue are decimal digit strings with no separators and
//! no exponent, so they survive any integer width. The writer emits this
//! byte-exact form; the parser accepts any JSON spelling of it.

#include <openssl/evp.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mignotte/construction.hpp"
#include "mignotte/numtheory.hpp"

namespace mignotte {

inline std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) !=
      1) {
    throw Error("digest failure");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

/// Content digest identifying a scheme: SHA-256 over the canonical
/// serialization of the moduli plus the threshold,
///   "mignotte-scheme-v1\n" "k=<k>\n" "moduli=<m1>,...,<mn>\n"
/// with decimal values. Its only contract is equality comparison.
inline std::string scheme_digest(const std::vector<Int>& moduli,
                                 std::size_t k) {
  std::string preimage = "mignotte-scheme-v1\nk=" + std::to_string(k) + "\nmoduli=";
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    if (i > 0) preimage.push_back(',');
    preimage += moduli[i].str();
  }
  preimage.push_back('\n');
  return sha256_hex(preimage);
}

/// One participant's piece of the secret.
struct Share {
  std::size_t index = 0;  // 1-based participant index
  Int modulus;
  Int residue;
  std::string scheme_id;

  friend bool operator==(const Share& a, const Share& b) {
    return a.index == b.index && a.modulus == b.modulus &&
           a.residue == b.residue && a.scheme_id == b.scheme_id;
  }
};

struct Secret {
  Int value;

  friend bool operator==(const Secret& a, const Secret& b) {
    return a.value == b.value;
  }
};

/// A scheme instance: constructed moduli, the threshold k, the derived
/// secret-range bounds, and the identifying digest.
class SchemeParams {
 public:
  SchemeParams(MignotteModuli moduli, std::size_t k)
      : moduli_(std::move(moduli)),
        k_(k),
        bounds_(bounds(moduli_, k)),
        scheme_id_(scheme_digest(moduli_.moduli(), k)) {
    if (!(bounds_.upper > bounds_.lower))
      throw Error("degenerate scheme: secret range is empty");
  }

  const MignotteModuli& moduli() const { return moduli_; }
  std::size_t n() const { return moduli_.size(); }
  std::size_t k() const { return k_; }
  const Bounds& range() const { return bounds_; }
  const std::string& scheme_id() const { return scheme_id_; }

 private:
  MignotteModuli moduli_;
  std::size_t k_;
  Bounds bounds_;
  std::string scheme_id_;
};

namespace detail {

inline void check_secret_range(const Int& value, const Bounds& b) {
  if (value <= b.lower)
    throw Error("secret below threshold range (N=" + b.lower.str() + ")");
  if (value >= b.upper)
    throw Error("secret above threshold range (M=" + b.upper.str() + ")");
}

// Shared validation for reconstruct and enumerate: same scheme, known
// indices, no duplicates, share contents matching the scheme's moduli.
inline void check_shares(const std::vector<Share>& shares,
                         const SchemeParams& params) {
  std::set<std::size_t> seen;
  for (const Share& s : shares) {
    if (s.scheme_id != params.scheme_id()) throw Error("scheme mismatch");
    if (s.index < 1 || s.index > params.n())
      throw Error("share index out of range");
    if (!seen.insert(s.index).second) throw Error("duplicate share index");
    if (s.modulus != params.moduli().moduli()[s.index - 1])
      throw Error("share modulus does not match scheme");
    if (s.residue < 0 || s.residue >= s.modulus)
      throw Error("residue out of range");
  }
}

}  // namespace detail

/// Split a secret into n residue shares. Deterministic: share i carries
/// secret mod m_i. The secret must lie strictly inside the scheme's
/// (lower, upper) range.
inline std::vector<Share> split(const Secret& secret,
                                const SchemeParams& params) {
  detail::check_secret_range(secret.value, params.range());
  std::vector<Share> shares;
  shares.reserve(params.n());
  for (std::size_t i = 0; i < params.n(); ++i) {
    const Int& m = params.moduli().moduli()[i];
    shares.push_back(Share{i + 1, m, secret.value % m, params.scheme_id()});
  }
  return shares;
}

/// Recover the secret from at least k shares via CRT over all provided
/// shares, then verify it lands strictly inside the scheme's range; a
/// value outside the range means the shares are inconsistent or tampered.
inline Secret reconstruct(const std::vector<Share>& shares,
                          const SchemeParams& params) {
  if (shares.size() < params.k()) {
    throw Error("insufficient shares: have " + std::to_string(shares.size()) +
                ", need " + std::to_string(params.k()));
  }
  detail::check_shares(shares, params);
  std::vector<ResiduePair> pairs;
  pairs.reserve(shares.size());
  for (const Share& s : shares) pairs.push_back({s.residue, s.modulus});
  Int value = crt_combine(pairs).residue;
  if (value <= params.range().lower || value >= params.range().upper)
    throw Error("inconsistent or tampered shares");
  return Secret{std::move(value)};
}

/// Every secret in the open range consistent with the given shares, in
/// increasing order. Intended as a desk-scale demonstration that fewer
/// than k shares underdetermine the secret, so the range is capped.
inline std::vector<Int> enumerate_candidates(
    const std::vector<Share>& shares, const SchemeParams& params,
    const Int& cap = Int(10000000)) {
  if (shares.size() >= params.k())
    throw Error("too many shares: enumeration needs fewer than k");
  if (params.range().upper > cap) throw Error("range too large to enumerate");
  detail::check_shares(shares, params);

  const Int& low = params.range().lower;
  const Int& high = params.range().upper;
  std::vector<Int> candidates;
  if (shares.empty()) {
    for (Int x = low + 1; x < high; ++x) candidates.push_back(x);
    return candidates;
  }
  std::vector<ResiduePair> pairs;
  pairs.reserve(shares.size());
  for (const Share& s : shares) pairs.push_back({s.residue, s.modulus});
  ResiduePair combined = crt_combine(pairs);
  Int x = low + 1 + detail::mod_floor(combined.residue - (low + 1),
                                      combined.modulus);
  for (; x < high; x += combined.modulus) candidates.push_back(x);
  return candidates;
}

/// Canonical share file bytes: see the format note at the top of this
/// header. Writing the same share twice yields identical bytes.
inline std::string serialize_share(const Share& share, std::size_t n,
                                   std::size_t k) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["scheme"] = "mignotte";
  j["scheme_id"] = share.scheme_id;
  j["n"] = n;
  j["k"] = k;
  j["index"] = share.index;
  j["modulus"] = share.modulus.str();
  j["residue"] = share.residue.str();
  return j.dump(2) + "\n";
}

struct ParsedShare {
  Share share;
  std::size_t n = 0;
  std::size_t k = 0;
};

inline ParsedShare parse_share(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed share file: ") + e.what());
  }
  try {
    if (j.at("version").get<int>() != 1)
      throw Error("unsupported share version");
    if (j.at("scheme").get<std::string>() != "mignotte")
      throw Error("not a mignotte share");
    ParsedShare out;
    out.share.scheme_id = j.at("scheme_id").get<std::string>();
    out.n = j.at("n").get<std::size_t>();
    out.k = j.at("k").get<std::size_t>();
    out.share.index = j.at("index").get<std::size_t>();
    out.share.modulus = parse_natural(j.at("modulus").get<std::string>());
    out.share.residue = parse_natural(j.at("residue").get<std::string>());
    if (out.share.modulus < 2) throw Error("modulus must be at least 2");
    if (out.share.residue >= out.share.modulus)
      throw Error("residue out of range");
    if (out.share.index < 1 || out.share.index > out.n)
      throw Error("share index out of range");
    check_threshold_range(out.k, out.n);
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed share file: ") + e.what());
  }
}

}  // namespace mignotte
