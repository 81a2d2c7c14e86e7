#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "treeforce/trees.hpp"

namespace tf {

/// Stream of conditions with on-demand verification that p_{n+1} <=_n p_n.
class FusionSequence {
  public:
    explicit FusionSequence(std::function<BlockTree(std::size_t)> gen)
        : state_(std::make_shared<State>()) {
        state_->gen = std::move(gen);
    }

    std::shared_ptr<const BlockTree> at(std::size_t n) const;

    /// Verify p_{m+1} <=_m p_m for all m < n; throws CertificateViolation on the
    /// first failure. Memoized and safe for concurrent callers.
    void verify_prefix(std::size_t n) const;

  private:
    struct State {
        std::function<BlockTree(std::size_t)> gen;
        std::map<std::size_t, std::shared_ptr<const BlockTree>> cache;
        std::map<std::size_t, bool> verified;
        std::mutex mutex;
    };
    std::shared_ptr<State> state_;
};

/// The fusion q with [q] = the intersection of the branch sets: membership of w is
/// decided by the first p_m whose m-th splitting level lies entirely beyond |w|.
LazyTree fusion(const FusionSequence& seq, std::size_t level_bound = 64);

}  // namespace tf
