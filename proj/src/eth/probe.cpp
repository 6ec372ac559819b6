// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/probe.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <variant>

namespace chainlens::eth {

void GasPolicy::validate() const
{
    if (vulnerability_threshold > base_call_gas) {
        throw Error("vulnerability threshold must not exceed the base call gas");
    }
}

FixtureExecutor::FixtureExecutor(std::span<const GasFixture> fixtures, bool serial) : serial_(serial)
{
    for (const GasFixture& f : fixtures) fixtures_.insert_or_assign({f.address, f.selector}, f);
}

const GasFixture* FixtureExecutor::lookup(const Address& contract, const Selector& selector) const
{
    const auto it = fixtures_.find({contract, selector});
    return it == fixtures_.end() ? nullptr : &it->second;
}

std::optional<std::uint64_t> FixtureExecutor::estimate_gas(const Address& contract, const Selector& selector)
{
    const GasFixture* f = lookup(contract, selector);
    if (!f) return std::nullopt;
    if (f->error) throw ExecutorFailure(*f->error);
    const std::lock_guard lock(mutex_);
    if (dead_.contains(contract)) return std::nullopt;
    return f->estimate;
}

InvokeOutcome FixtureExecutor::invoke(const Address& contract, const Selector& selector, const Address& caller)
{
    const GasFixture* f = lookup(contract, selector);
    if (f && f->error) throw ExecutorFailure(*f->error);
    const std::lock_guard lock(mutex_);
    ++invocations_;
    if (!f || dead_.contains(contract)) return InvokeOutcome{};
    InvokeOutcome out;
    out.gas_used = f->estimate;
    if (!f->terminates) return out;
    out.terminated = true;
    dead_.insert(contract);
    switch (f->refund.kind) {
    case FixtureRefund::Kind::None: break;
    case FixtureRefund::Kind::Caller: out.refund_to = caller; break;
    case FixtureRefund::Kind::To: out.refund_to = f->refund.to; break;
    }
    return out;
}

std::size_t FixtureExecutor::invocations() const
{
    const std::lock_guard lock(mutex_);
    return invocations_;
}

std::string_view refund_destination_name(RefundDestination d) noexcept
{
    switch (d) {
    case RefundDestination::None: return "none";
    case RefundDestination::Caller: return "caller";
    case RefundDestination::Creator: return "creator";
    case RefundDestination::NullAddress: return "null_address";
    case RefundDestination::Other: return "other";
    }
    return "?";
}

namespace {

using Outcome = std::variant<std::monostate, ProbeResult, ProbeFailure>;

Outcome probe_one(const ContractRecord& contract, ContractExecutor& executor, const SelectorDictionary& dictionary,
                  const GasPolicy& policy, const Address& caller)
{
    try {
        ProbeResult result;
        result.contract = contract.address;
        std::vector<std::uint64_t> estimates;
        for (const SelectorEntry& entry : dictionary.entries()) {
            const auto gas = executor.estimate_gas(contract.address, entry.selector);
            if (gas && *gas < policy.vulnerability_threshold) {
                result.vulnerable_selectors.push_back(entry.selector);
                estimates.push_back(*gas);
            }
        }
        if (result.vulnerable_selectors.empty()) return std::monostate{};

        result.triggering_selector = result.vulnerable_selectors.front();
        result.gas_estimate = estimates.front();
        for (std::size_t i = 0; i < result.vulnerable_selectors.size(); ++i) {
            const InvokeOutcome out = executor.invoke(contract.address, result.vulnerable_selectors[i], caller);
            if (!out.terminated) continue;
            result.confirmed_terminated = true;
            result.triggering_selector = result.vulnerable_selectors[i];
            result.gas_estimate = estimates[i];
            if (!out.refund_to || out.refund_to->is_null()) {
                result.refund_destination = RefundDestination::NullAddress;
            } else if (*out.refund_to == caller) {
                result.refund_destination = RefundDestination::Caller;
            } else if (*out.refund_to == contract.creator) {
                result.refund_destination = RefundDestination::Creator;
            } else {
                result.refund_destination = RefundDestination::Other;
                result.refund_address = out.refund_to;
            }
            break;
        }
        result.suspicious_default_function =
            !result.confirmed_terminated && result.vulnerable_selectors.size() == dictionary.size();
        return result;
    } catch (const ExecutorFailure& e) {
        return ProbeFailure{contract.address, e.what()};
    }
}

} // namespace

ProbeBatch probe_suicidal(std::span<const ContractRecord> contracts, ContractExecutor& executor,
                          const SelectorDictionary& dictionary, const GasPolicy& policy, const ProbeOptions& options)
{
    policy.validate();
    std::vector<Outcome> outcomes(contracts.size());
    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    if (executor.serial()) threads = 1;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, contracts.size()));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto work = [&] {
        try {
            for (std::size_t i = next++; i < contracts.size(); i = next++) {
                outcomes[i] = probe_one(contracts[i], executor, dictionary, policy, options.caller);
            }
        } catch (...) {
            next = contracts.size();
            const std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    if (threads <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    if (error) std::rethrow_exception(error);

    ProbeBatch batch;
    for (Outcome& o : outcomes) {
        if (auto* r = std::get_if<ProbeResult>(&o)) batch.results.push_back(std::move(*r));
        if (auto* f = std::get_if<ProbeFailure>(&o)) batch.failures.push_back(std::move(*f));
    }
    return batch;
}

} // namespace chainlens::eth
