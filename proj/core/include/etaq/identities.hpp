#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etaq/prefixed_series.hpp"
#include "etaq/rational.hpp"

namespace etaq {

/* Name plus optional family parameter, e.g. {"genk", 3}. */
struct IdentityId {
    std::string name;
    std::optional<int> k;

    std::string to_string() const;
};

/* First disagreement between two sides. A prefix mismatch means the
 * leading exponents differ; otherwise `power` is the absolute power of q
 * when the common exponent is an integer, and the offset from the common
 * fractional prefix otherwise. */
struct Mismatch {
    bool at_prefix = false;
    long power = 0;
    Rational lhs, rhs;
};

enum class VerifyStatus { verified, mismatch };

struct VerificationReport {
    IdentityId id;
    int order = 0;
    VerifyStatus status = VerifyStatus::verified;
    std::optional<Mismatch> first_mismatch;
    std::chrono::milliseconds elapsed{0};
};

struct IdentityInfo {
    std::string name;
    std::string description;
    bool parameterized = false;
    int default_order = 200;
    int k_min = 2;
    int k_max = 10;
};

/* The full registry, in the deterministic order used everywhere. */
std::vector<IdentityInfo> list_identities();

/* Builds both sides of the identity through `order` (per-identity default
 * when omitted) and compares them coefficient by coefficient, exponents
 * first. UnknownIdentity / BadParams for bad input; a false identity is a
 * mismatch report, not an error. */
VerificationReport verify(const IdentityId& id, std::optional<int> order = {});

/* Runs the whole registry, instantiating parameterized identities for
 * k = 2..k_max, optionally fanning out over `jobs` worker threads.
 * Reports come back in registry order regardless of completion order;
 * `on_done` (if set) fires once per finished report. */
std::vector<VerificationReport> verify_all(
    std::optional<int> order, int k_max, unsigned jobs = 1,
    const std::function<void(const VerificationReport&)>& on_done = {});

/* Exact comparison used by verify; exposed so tests can run perturbed
 * series through the same path. */
std::optional<Mismatch> compare_sides(const PrefixedSeries& lhs,
                                      const PrefixedSeries& rhs);

/* One-line JSON object: {"identity": ..., "params": [...], "order": ...,
 * "status": ..., "first_mismatch": ..., "elapsed_ms": ...}. Parsing and
 * re-serializing the string is byte-identical. */
std::string to_json_string(const VerificationReport& report);

/* Human-readable one-liner, e.g. "rr1: verified to order 300". */
std::string to_text_line(const VerificationReport& report);

} // namespace etaq
