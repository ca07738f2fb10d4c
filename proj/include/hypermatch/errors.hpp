#pragma once

#include <stdexcept>
#include <string>

namespace hypermatch {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// An allocation would push a node's load above its unit capacity.
class CapacityViolation : public Error {
public:
    CapacityViolation(const std::string& node, double load)
        : Error("capacity violated at node " + node + ": load " + std::to_string(load)),
          node_label(node), load(load) {}
    std::string node_label;
    double load;
};

/// An allocation references a hyperedge outside the current arrival.
class UnknownHyperedge : public Error {
public:
    explicit UnknownHyperedge(long long id)
        : Error("allocation references hyperedge " + std::to_string(id) +
                " outside the current arrival") {}
};

/// An operation that requires k = 3 was called on a different uniformity.
class WrongUniformity : public Error {
public:
    explicit WrongUniformity(int k)
        : Error("operation requires 3-uniform hyperedges, got k = " + std::to_string(k)) {}
};

/// Exact water-filling requires the arrival's hyperedges to be offline-disjoint.
class NotDisjoint : public Error {
public:
    NotDisjoint() : Error("hyperedges of this arrival share offline nodes; "
                          "exact mode requires pairwise disjoint hyperedges") {}
};

/// An arrival exceeds the configured online degree bound.
class DegreeBound : public Error {
public:
    DegreeBound(std::size_t got, int bound)
        : Error("arrival has " + std::to_string(got) + " hyperedges, degree bound is " +
                std::to_string(bound)) {}
};

/// The adversary was asked to advance past its final phase.
class PhaseOverflow : public Error {
public:
    explicit PhaseOverflow(int t) : Error("phase " + std::to_string(t) + " exceeds horizon") {}
};

/// Invalid or inconsistent configuration.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Instance exceeds a guarded size limit (e.g. brute-force OPT).
class TooLarge : public Error {
public:
    explicit TooLarge(const std::string& what) : Error(what) {}
};

/// analytic OPT requested for a source that carries no closed form.
class UnknownSource : public Error {
public:
    UnknownSource() : Error("source provides no analytic optimum") {}
};

} // namespace hypermatch
