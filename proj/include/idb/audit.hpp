#pragma once

#include <optional>
#include <string>
#include <vector>

#include "idb/graph.hpp"
#include "idb/json_io.hpp"
#include "idb/solvers.hpp"

namespace idb {

enum class ClaimKind { equality, upper_bound, existential };
enum class VerdictStatus { confirmed, refuted, not_applicable, budget_exceeded };

std::string to_string(ClaimKind k);
std::string to_string(VerdictStatus s); // "CONFIRMED", "REFUTED", ...

// A hypothesis to audit: a machine-checkable statement about invariants,
// parameterized over a family, the small-graph census, or graph pairs.
struct Claim {
    std::string id;
    ClaimKind kind;
    std::string scope;     // how run_audit sweeps it
    std::string statement; // the formula being tested
};

// Concrete parameters for one evaluation of a claim.
struct Binding {
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> q;
    std::optional<int> s;
    std::optional<std::string> g; // graph6
    std::optional<std::string> h; // graph6
    std::optional<std::vector<Edge>> edges;
    Json to_json() const;
};

struct ClaimVerdict {
    std::string claim_id;
    Binding binding;
    VerdictStatus status = VerdictStatus::not_applicable;
    Json expected;
    Json computed;
    Json witness;
    Json to_json() const;
};

// The full catalog; ids are stable and unique.
const std::vector<Claim>& claims_catalog();

const Claim& claim_by_id(const std::string& id); // UnknownClaimError

// Evaluates one binding. Throws UnknownClaimError / BindingOutOfScopeError;
// a solver budget trip becomes a BUDGET_EXCEEDED verdict rather than an
// exception.
ClaimVerdict check_claim(const std::string& id, const Binding& binding, Budget budget = {});

struct AuditOptions {
    int max_n = 6; // cap on the vertex count of any graph a binding evaluates
    std::vector<std::string> ids; // empty = every claim
    Budget budget;
    int threads = 1;
};

struct ClaimReport {
    Claim claim;
    std::vector<ClaimVerdict> verdicts;
    int confirmed = 0;
    int refuted = 0;
    int not_applicable = 0;
    int budget_exceeded = 0;
};

struct AuditReport {
    std::vector<std::string> notes;
    std::vector<ClaimReport> claims;
    Json to_json() const;
};

// Sweeps every selected claim over its scope, bounded by max_n. Bindings are
// independent work items; the report order is deterministic regardless of
// thread count, and per-binding budget trips never abort the run.
AuditReport run_audit(const AuditOptions& opts = {});

} // namespace idb
