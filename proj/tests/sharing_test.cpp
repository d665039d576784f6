#include "mignotte/sharing.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "test_support.hpp"

using mignotte::construct;
using mignotte::enumerate_candidates;
using mignotte::Error;
using mignotte::Int;
using mignotte::parse_share;
using mignotte::ParsedShare;
using mignotte::reconstruct;
using mignotte::scheme_digest;
using mignotte::SchemeParams;
using mignotte::Secret;
using mignotte::serialize_share;
using mignotte::sha256_hex;
using mignotte::Share;
using mignotte::split;
using mignotte::validate_seed;

namespace {

template <typename F>
std::string error_message(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

// Moduli (3, 4, 5) with k = 2: secret range is the open interval (5, 12).
SchemeParams canonical_scheme() {
  return SchemeParams(construct(validate_seed({Int(1), Int(2), Int(3)}), 1), 2);
}

// Frozen with an independent SHA-256 implementation (python hashlib over
// the documented preimage bytes).
const char kCanonicalSchemeId[] =
    "f6f759f81da20411b3ff6daca6c4d3c27bfb916e86e80e268b6e09c07580e080";

TEST(SchemeDigest, FrozenAgainstIndependentImplementation) {
  EXPECT_EQ(scheme_digest({Int(3), Int(4), Int(5)}, 2), kCanonicalSchemeId);
}

TEST(SchemeDigest, Sha256KnownAnswer) {
  // FIPS 180-2 test vector for "abc".
  EXPECT_EQ(
      sha256_hex("abc"),
      "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(SchemeDigest, SensitiveToThresholdAndModuli) {
  std::string base = scheme_digest({Int(3), Int(4), Int(5)}, 2);
  EXPECT_NE(scheme_digest({Int(3), Int(4), Int(5)}, 3), base);
  EXPECT_NE(scheme_digest({Int(3), Int(4), Int(7)}, 2), base);
  EXPECT_NE(scheme_digest({Int(3), Int(4)}, 2), base);
  // Concatenation ambiguity must not collide: (3, 45) vs (34, 5).
  EXPECT_NE(scheme_digest({Int(3), Int(45)}, 2),
            scheme_digest({Int(34), Int(5)}, 2));
}

TEST(SchemeParams, CanonicalExample) {
  SchemeParams params = canonical_scheme();
  EXPECT_EQ(params.n(), 3u);
  EXPECT_EQ(params.k(), 2u);
  EXPECT_EQ(params.range().upper, 12);
  EXPECT_EQ(params.range().lower, 5);
  EXPECT_EQ(params.scheme_id(), kCanonicalSchemeId);
}

TEST(Split, CanonicalResidues) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  ASSERT_EQ(shares.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(shares[i].index, i + 1);
    EXPECT_EQ(shares[i].scheme_id, kCanonicalSchemeId);
  }
  EXPECT_EQ(shares[0].residue, 1);  // 7 mod 3
  EXPECT_EQ(shares[1].residue, 3);  // 7 mod 4
  EXPECT_EQ(shares[2].residue, 2);  // 7 mod 5
  EXPECT_EQ(shares[0].modulus, 3);
  EXPECT_EQ(shares[1].modulus, 4);
  EXPECT_EQ(shares[2].modulus, 5);
}

TEST(Split, Deterministic) {
  SchemeParams params = canonical_scheme();
  EXPECT_EQ(split(Secret{9}, params), split(Secret{9}, params));
}

TEST(Split, RangeBoundariesAreExclusive) {
  SchemeParams params = canonical_scheme();
  EXPECT_EQ(error_message([&] { split(Secret{5}, params); }),
            "secret below threshold range (N=5)");
  EXPECT_EQ(error_message([&] { split(Secret{12}, params); }),
            "secret above threshold range (M=12)");
  EXPECT_EQ(error_message([&] { split(Secret{2}, params); }),
            "secret below threshold range (N=5)");
  EXPECT_NO_THROW(split(Secret{6}, params));
  EXPECT_NO_THROW(split(Secret{11}, params));
}

TEST(Reconstruct, AnyTwoOfThreeRecoverTheSecret) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  EXPECT_EQ(reconstruct({shares[0], shares[1]}, params).value, 7);
  EXPECT_EQ(reconstruct({shares[0], shares[2]}, params).value, 7);
  EXPECT_EQ(reconstruct({shares[1], shares[2]}, params).value, 7);
  EXPECT_EQ(reconstruct(shares, params).value, 7);
  // Order of presentation does not matter.
  EXPECT_EQ(reconstruct({shares[2], shares[0]}, params).value, 7);
}

TEST(Reconstruct, InsufficientShares) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  EXPECT_EQ(error_message([&] { reconstruct({shares[0]}, params); }),
            "insufficient shares: have 1, need 2");
  EXPECT_EQ(error_message([&] { reconstruct({}, params); }),
            "insufficient shares: have 0, need 2");
}

TEST(Reconstruct, TamperedResidueDetected) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  shares[1].residue = 0;  // CRT now lands on 4, outside (5, 12)
  EXPECT_EQ(error_message([&] { reconstruct({shares[0], shares[1]}, params); }),
            "inconsistent or tampered shares");
}

TEST(Reconstruct, ShareValidationErrors) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);

  Share foreign = shares[0];
  foreign.scheme_id = std::string(64, '0');
  EXPECT_EQ(error_message([&] { reconstruct({foreign, shares[1]}, params); }),
            "scheme mismatch");

  EXPECT_EQ(error_message([&] { reconstruct({shares[0], shares[0]}, params); }),
            "duplicate share index");

  Share bad_index = shares[0];
  bad_index.index = 4;
  EXPECT_EQ(
      error_message([&] { reconstruct({bad_index, shares[1]}, params); }),
      "share index out of range");

  Share bad_modulus = shares[0];
  bad_modulus.modulus = 7;
  EXPECT_EQ(
      error_message([&] { reconstruct({bad_modulus, shares[1]}, params); }),
      "share modulus does not match scheme");

  Share bad_residue = shares[0];
  bad_residue.residue = 3;
  EXPECT_EQ(
      error_message([&] { reconstruct({bad_residue, shares[1]}, params); }),
      "residue out of range");
}

TEST(Enumerate, NoSharesListsTheWholeRange) {
  SchemeParams params = canonical_scheme();
  std::vector<Int> expected{6, 7, 8, 9, 10, 11};
  EXPECT_EQ(enumerate_candidates({}, params), expected);
}

TEST(Enumerate, OneShareNarrowsButDoesNotDetermine) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  std::vector<Int> expected{7, 10};  // x in (5, 12) with x = 1 mod 3
  EXPECT_EQ(enumerate_candidates({shares[0]}, params), expected);
}

TEST(Enumerate, ThresholdManySharesRejected) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  EXPECT_EQ(error_message([&] {
              enumerate_candidates({shares[0], shares[1]}, params);
            }),
            "too many shares: enumeration needs fewer than k");
}

TEST(Enumerate, RefusesRangesAboveTheCap) {
  SchemeParams params = canonical_scheme();
  EXPECT_EQ(error_message([&] { enumerate_candidates({}, params, Int(10)); }),
            "range too large to enumerate");
}

TEST(Enumerate, MatchesBruteForceScan) {
  // Small schemes where the entire open range can be scanned directly.
  std::vector<SchemeParams> schemes;
  for (int t = 1; t <= 4; ++t)
    schemes.emplace_back(construct(validate_seed({Int(1), Int(2), Int(3)}), t),
                         2);
  schemes.emplace_back(construct(validate_seed({Int(2), Int(3), Int(5)}), 1),
                       2);
  schemes.emplace_back(
      construct(validate_seed({Int(1), Int(2), Int(3), Int(5)}), 1), 2);
  schemes.emplace_back(
      construct(validate_seed({Int(1), Int(2), Int(3), Int(5)}), 1), 3);

  std::mt19937_64 rng(21);
  for (const SchemeParams& params : schemes) {
    const Int& low = params.range().lower;
    const Int& high = params.range().upper;
    Int secret = testsupport::rand_range(rng, low + 1, high);
    std::vector<Share> all = split(Secret{secret}, params);
    for (std::size_t j = 0; j < params.k(); ++j) {
      for (const auto& subset : testsupport::k_subsets(params.n(), j)) {
        std::vector<Share> given;
        for (std::size_t idx : subset) given.push_back(all[idx]);

        std::vector<Int> expected;
        for (Int x = low + 1; x < high; ++x) {
          bool consistent = true;
          for (const Share& s : given) {
            if (x % s.modulus != s.residue) {
              consistent = false;
              break;
            }
          }
          if (consistent) expected.push_back(x);
        }

        std::vector<Int> got = enumerate_candidates(given, params);
        EXPECT_EQ(got, expected);
        EXPECT_TRUE(std::find(got.begin(), got.end(), secret) != got.end());
      }
    }
  }
}

// Round trip across the construction corpus: every k-subset of the
// shares recovers the secret, supersets agree, and corrupting a residue
// can never silently return the original secret.
TEST(RoundTrip, EveryThresholdSubsetAcrossTheCorpus) {
  std::mt19937_64 rng(22);
  int cases = 0;
  for (const mignotte::SeedSequence& seed : testsupport::seed_corpus()) {
    if (seed.size() > 6) continue;
    mignotte::MignotteModuli mm = construct(seed, 1 + int(rng() % 3));
    for (std::size_t k = 2; k + 1 <= mm.size(); ++k) {
      SchemeParams params(mm, k);
      for (int rep = 0; rep < 2; ++rep) {
        Int secret = testsupport::rand_range(rng, params.range().lower + 1,
                                             params.range().upper);
        std::vector<Share> all = split(Secret{secret}, params);
        ASSERT_EQ(all.size(), params.n());
        for (const auto& subset : testsupport::k_subsets(params.n(), k)) {
          std::vector<Share> given;
          for (std::size_t idx : subset) given.push_back(all[idx]);
          ASSERT_EQ(reconstruct(given, params).value, secret);

          // Extending an honest quorum with more honest shares changes
          // nothing.
          if (subset.front() != 0) {
            given.push_back(all[0]);
            ASSERT_EQ(reconstruct(given, params).value, secret);
            given.pop_back();
          }

          // A corrupted residue either trips the range check or lands
          // on some other in-range value, never back on the secret.
          std::vector<Share> tampered = given;
          Share& victim = tampered[rng() % tampered.size()];
          victim.residue = (victim.residue + 1 + Int(rng() % 7)) %
                           victim.modulus;
          if (victim.residue == all[victim.index - 1].residue) continue;
          try {
            ASSERT_NE(reconstruct(tampered, params).value, secret);
          } catch (const Error& e) {
            ASSERT_STREQ(e.what(), "inconsistent or tampered shares");
          }
          ++cases;
        }
      }
    }
  }
  EXPECT_GE(cases, 300);
}

TEST(ShareFiles, CanonicalBytes) {
  SchemeParams params = canonical_scheme();
  std::vector<Share> shares = split(Secret{7}, params);
  // Frozen byte-for-byte (python json.dumps with the same layout).
  std::string expected =
      "{\n"
      "  \"version\": 1,\n"
      "  \"scheme\": \"mignotte\",\n"
      "  \"scheme_id\": "
      "\"f6f759f81da20411b3ff6daca6c4d3c27bfb916e86e80e268b6e09c07580e080\",\n"
      "  \"n\": 3,\n"
      "  \"k\": 2,\n"
      "  \"index\": 1,\n"
      "  \"modulus\": \"3\",\n"
      "  \"residue\": \"1\"\n"
      "}\n";
  EXPECT_EQ(serialize_share(shares[0], params.n(), params.k()), expected);
  EXPECT_EQ(serialize_share(shares[0], params.n(), params.k()),
            serialize_share(shares[0], params.n(), params.k()));
}

TEST(ShareFiles, RoundTrip) {
  SchemeParams params = canonical_scheme();
  for (const Share& share : split(Secret{10}, params)) {
    ParsedShare parsed =
        parse_share(serialize_share(share, params.n(), params.k()));
    EXPECT_EQ(parsed.share, share);
    EXPECT_EQ(parsed.n, params.n());
    EXPECT_EQ(parsed.k, params.k());
  }
}

TEST(ShareFiles, ParserAcceptsAnyJsonSpelling) {
  ParsedShare parsed = parse_share(
      "{\"residue\":\"1\",\"modulus\":\"3\",\"index\":1,\"k\":2,\"n\":3,"
      "\"scheme_id\":\"abc\",\"scheme\":\"mignotte\",\"version\":1}");
  EXPECT_EQ(parsed.share.index, 1u);
  EXPECT_EQ(parsed.share.modulus, 3);
  EXPECT_EQ(parsed.share.residue, 1);
  EXPECT_EQ(parsed.share.scheme_id, "abc");
}

TEST(ShareFiles, ParserRejectsBadInput) {
  EXPECT_THROW(parse_share("not json"), Error);
  EXPECT_THROW(parse_share("{}"), Error);
  EXPECT_EQ(error_message([] {
              parse_share(
                  "{\"version\":2,\"scheme\":\"mignotte\",\"scheme_id\":\"x\","
                  "\"n\":3,\"k\":2,\"index\":1,\"modulus\":\"3\","
                  "\"residue\":\"1\"}");
            }),
            "unsupported share version");
  EXPECT_EQ(error_message([] {
              parse_share(
                  "{\"version\":1,\"scheme\":\"shamir\",\"scheme_id\":\"x\","
                  "\"n\":3,\"k\":2,\"index\":1,\"modulus\":\"3\","
                  "\"residue\":\"1\"}");
            }),
            "not a mignotte share");
  EXPECT_EQ(error_message([] {
              parse_share(
                  "{\"version\":1,\"scheme\":\"mignotte\",\"scheme_id\":\"x\","
                  "\"n\":3,\"k\":2,\"index\":1,\"modulus\":\"3\","
                  "\"residue\":\"5\"}");
            }),
            "residue out of range");
  EXPECT_EQ(error_message([] {
              parse_share(
                  "{\"version\":1,\"scheme\":\"mignotte\",\"scheme_id\":\"x\","
                  "\"n\":3,\"k\":2,\"index\":0,\"modulus\":\"3\","
                  "\"residue\":\"1\"}");
            }),
            "share index out of range");
  EXPECT_EQ(error_message([] {
              parse_share(
                  "{\"version\":1,\"scheme\":\"mignotte\",\"scheme_id\":\"x\","
                  "\"n\":3,\"k\":3,\"index\":1,\"modulus\":\"3\","
                  "\"residue\":\"1\"}");
            }),
            "k must satisfy 1 < k < n");
}

}  // namespace
