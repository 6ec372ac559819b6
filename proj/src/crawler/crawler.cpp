// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/crawler/crawler.hpp>

#include <chainlens/crawler/targets.hpp>

#include <algorithm>
#include <condition_variable>
#include <deque>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

namespace chainlens::crawler {

namespace {

class CrawlState
{
public:
    CrawlState(DiscoveryTransport& transport, const CrawlConfig& config, std::span<const NodeId> targets)
        : transport_(transport), config_(config), targets_(targets) {}

    /// Pings the seeds sequentially; reachable ones become known.
    void admit_seeds(std::span<const PeerInfo> seeds)
    {
        for (const PeerInfo& seed : seeds) {
            if (!attempted_.insert(seed.node_id).second) continue;
            ++pings_;
            const PingOutcome ping = transport_.ping_pong(seed);
            if (ping.ok) {
                admit(seed);
            } else {
                failed_.insert(FailedEndpoint{seed.ip, seed.port, "ping: " + ping.failure});
            }
        }
        if (known_.empty()) throw NoSeedsReachable();
    }

    void run()
    {
        std::size_t workers = config_.worker_threads;
        if (workers == 0) workers = std::max<std::size_t>(2, std::thread::hardware_concurrency());
        workers = std::min(workers, config_.max_in_flight);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t i = 0; i < workers; ++i) pool.emplace_back([this] { worker(); });
        for (std::thread& t : pool) t.join();
        if (error_) std::rethrow_exception(error_);
    }

    CrawlReport report() &&
    {
        CrawlReport r;
        r.known_peers = std::move(known_);
        std::sort(r.known_peers.begin(), r.known_peers.end());
        r.failed_endpoints.assign(failed_.begin(), failed_.end());
        r.stats = endpoint_stats(r.known_peers, config_.prefix_bits);
        r.find_node_queries = queries_;
        r.ping_attempts = pings_;
        return r;
    }

private:
    struct Pending {
        std::size_t peer;
        std::size_t next_target{0};
    };

    // Caller holds mutex_ or is single-threaded.
    void admit(const PeerInfo& peer)
    {
        known_.push_back(peer);
        if (!targets_.empty()) queue_.push_back(Pending{known_.size() - 1});
    }

    void worker()
    {
        std::unique_lock lock(mutex_);
        while (true) {
            cv_.wait(lock, [this] { return !queue_.empty() || active_ == 0 || error_; });
            if (error_ || queue_.empty()) break;
            Pending& front = queue_.front();
            const PeerInfo peer = known_[front.peer];
            const NodeId& target = targets_[front.next_target];
            if (++front.next_target == targets_.size()) queue_.pop_front();
            ++active_;
            ++queries_;
            lock.unlock();
            try {
                query(peer, target);
            } catch (...) {
                lock.lock();
                if (!error_) error_ = std::current_exception();
                --active_;
                cv_.notify_all();
                break;
            }
            lock.lock();
            --active_;
            cv_.notify_all();
        }
    }

    void query(const PeerInfo& peer, const NodeId& target)
    {
        FindNodeOutcome result = transport_.find_node(peer, target);
        if (!result.ok) {
            std::lock_guard lock(mutex_);
            failed_.insert(FailedEndpoint{peer.ip, peer.port, "find_node: " + result.failure});
            return;
        }
        if (result.peers.size() > config_.neighbor_k) result.peers.resize(config_.neighbor_k);
        for (const PeerInfo& p : result.peers) {
            {
                std::lock_guard lock(mutex_);
                if (!attempted_.insert(p.node_id).second) continue;
                ++pings_;
            }
            const PingOutcome ping = transport_.ping_pong(p);
            std::lock_guard lock(mutex_);
            if (ping.ok) {
                admit(p);
                cv_.notify_all();
            } else {
                failed_.insert(FailedEndpoint{p.ip, p.port, "ping: " + ping.failure});
            }
        }
    }

    DiscoveryTransport& transport_;
    const CrawlConfig& config_;
    std::span<const NodeId> targets_;

    std::mutex mutex_;
    std::condition_variable cv_;
    std::deque<Pending> queue_;
    std::size_t active_{0};
    std::exception_ptr error_;

    std::vector<PeerInfo> known_;
    std::unordered_set<NodeId, NodeIdHasher> attempted_;
    std::set<FailedEndpoint> failed_;
    std::uint64_t queries_{0};
    std::uint64_t pings_{0};
};

} // namespace

void CrawlConfig::validate() const
{
    if (prefix_bits > kMaxPrefixBits) throw Error("prefix_bits must be at most 32");
    if (neighbor_k < 1) throw Error("neighbor_k must be at least 1");
    if (max_in_flight < 1) throw Error("max_in_flight must be at least 1");
}

CrawlReport crawl(DiscoveryTransport& transport, std::span<const PeerInfo> seeds, const CrawlConfig& config)
{
    config.validate();
    const std::vector<NodeId> targets = precompute_targets(config.prefix_bits, config.rng_seed);
    return crawl(transport, seeds, config, targets);
}

CrawlReport crawl(DiscoveryTransport& transport, std::span<const PeerInfo> seeds, const CrawlConfig& config,
                  std::span<const NodeId> targets)
{
    config.validate();
    CrawlState state(transport, config, targets);
    state.admit_seeds(seeds);
    state.run();
    return std::move(state).report();
}

} // namespace chainlens::crawler
