#include "treeforce/fusion.hpp"

#include <algorithm>

namespace tf {

std::shared_ptr<const BlockTree> FusionSequence::at(std::size_t n) const {
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->cache.find(n);
    if (it != state_->cache.end()) return it->second;
    auto t = std::make_shared<const BlockTree>(state_->gen(n));
    state_->cache.emplace(n, t);
    return t;
}

void FusionSequence::verify_prefix(std::size_t n) const {
    for (std::size_t m = 0; m < n; ++m) {
        {
            std::lock_guard<std::mutex> lock(state_->mutex);
            auto it = state_->verified.find(m);
            if (it != state_->verified.end()) {
                if (!it->second)
                    throw CertificateViolation(m, "fusion sequence: p_{m+1} is not <=_m p_m");
                continue;
            }
        }
        bool ok = leq_n(*at(m + 1), *at(m), m);
        {
            std::lock_guard<std::mutex> lock(state_->mutex);
            state_->verified[m] = ok;
        }
        if (!ok) throw CertificateViolation(m, "fusion sequence: p_{m+1} is not <=_m p_m");
    }
}

LazyTree fusion(const FusionSequence& seq, std::size_t level_bound) {
    // Stabilization: once min |L_m(p_m)| exceeds |w|, membership of w is fixed:
    // every node of p_m that short is an initial segment of a preserved splitting
    // node, so p_m decides w for the whole tail of the sequence.
    struct Cache {
        std::mutex mutex;
        std::vector<std::shared_ptr<const BlockTree>> trees;
        std::vector<std::size_t> level_heights;  // split_height(m) of p_m
    };
    auto cache = std::make_shared<Cache>();
    auto member = [seq, level_bound, cache](const Word& w) {
        std::shared_ptr<const BlockTree> pm;
        std::size_t m = 0;
        {
            std::lock_guard<std::mutex> lock(cache->mutex);
            while (cache->level_heights.empty() || cache->level_heights.back() <= w.size()) {
                std::size_t idx = cache->trees.size();
                if (idx > level_bound) throw BudgetExceeded("fusion: stabilization level bound");
                auto t = seq.at(idx);
                cache->trees.push_back(t);
                cache->level_heights.push_back(t->split_height(idx));
            }
            while (cache->level_heights[m] <= w.size()) ++m;
            pm = cache->trees[m];
        }
        seq.verify_prefix(m);
        return pm->member(w);
    };
    return LazyTree(member);
}

}  // namespace tf
