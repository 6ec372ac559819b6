// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "context.hpp"

#include <chainlens/common/errors.hpp>
#include <chainlens/eth/analytics.hpp>
#include <chainlens/eth/probe.hpp>
#include <chainlens/eth/registry.hpp>
#include <chainlens/eth/similarity.hpp>

#include <fstream>
#include <sstream>

namespace chainlens::cli {

namespace {

using nlohmann::json;

struct EthArgs {
    std::vector<std::string> side_files;
    std::size_t top{10};
    std::vector<std::int64_t> edges{eth::kDefaultLifetimeEdges};
    std::vector<std::string> fixture_files;
    std::string dictionary;
    std::string caller{"0x000000000000000000000000000000000000ca11"};
    std::uint64_t threshold{21'000};
    unsigned threads{0};
    bool serial{false};
    std::string references;
    std::size_t minor{100};
    std::size_t heavy{1000};
};

eth::SideRecords load_side(const std::vector<std::string>& files)
{
    eth::SideRecords side;
    for (const std::string& f : files) {
        std::ifstream in(f);
        if (!in) throw IoError("cannot open " + f);
        try {
            eth::read_side_records(in, side);
        } catch (const MalformedRow& e) {
            throw Error(f + ": " + e.what());
        }
    }
    return side;
}

struct EthView {
    model::ChainSnapshot snapshot;
    eth::ContractRegistry registry;
};

EthView load_view(const Context& ctx, const eth::SideRecords& side)
{
    const model::Store store = ctx.open_store();
    const auto cutoff = ctx.cutoff_height(store, model::ChainKind::Ethereum);
    if (store.block_count(model::ChainKind::Ethereum, cutoff) == 0) throw EmptyChain("eth");
    EthView v{store.snapshot(model::ChainKind::Ethereum, cutoff), {}};
    v.registry = eth::build_contract_registry(v.snapshot, side);
    return v;
}

void run_classify(Context& ctx, const EthArgs& a)
{
    const EthView v = load_view(ctx, load_side(a.side_files));
    report::Report r;
    r.table.columns = {"month", "to_account", "to_contract", "create_contract", "zombie_create", "total"};
    for (const auto& m : eth::monthly_class_counts(v.snapshot, v.registry)) {
        r.table.add({m.month.to_string(), m.to_account, m.to_contract, m.create_contract, m.zombie_create, m.total()});
    }
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

void run_zombies(Context& ctx, const EthArgs& a)
{
    const EthView v = load_view(ctx, load_side(a.side_files));
    const eth::ZombieReport z = eth::zombie_report(v.registry, a.top);
    report::Report r;
    r.table.columns = {"height", "cumulative"};
    for (const auto& [h, c] : z.cdf) r.table.add({h, c});
    json top = json::array();
    for (const eth::ContractRecord& c : z.top_by_balance) {
        top.push_back({{"address", c.address.to_hex()},
                       {"creation_height", c.creation_height},
                       {"creator", c.creator.to_hex()},
                       {"creation_tx", c.creation_tx ? json(*c.creation_tx) : json(nullptr)},
                       {"endowment", amount_to_string(c.endowment)}});
    }
    json creators = json::array();
    for (const auto& [addr, n] : z.per_creator) creators.push_back({{"creator", addr.to_hex()}, {"count", n}});
    r.document = {{"count", z.count},
                  {"total_balance", amount_to_string(z.total_balance)},
                  {"cdf", r.table.to_json()},
                  {"top_by_balance", top},
                  {"per_creator", creators}};
    ctx.emit(r, report::Format::Json);
}

void run_lifetimes(Context& ctx, const EthArgs& a)
{
    const EthView v = load_view(ctx, load_side(a.side_files));
    report::Report r;
    r.table.columns = {"bucket", "upper_blocks", "count"};
    const auto buckets = eth::lifetime_histogram(v.registry, a.edges);
    for (std::size_t i = 0; i < buckets.size(); ++i) {
        const auto& b = buckets[i];
        const std::string label = b.upper ? "<=" + std::to_string(*b.upper) : ">" + std::to_string(a.edges.back());
        r.table.add({label, b.upper ? json(*b.upper) : json(nullptr), b.count});
    }
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

void run_precreation(Context& ctx, const EthArgs& a)
{
    const EthView v = load_view(ctx, load_side(a.side_files));
    report::Report r;
    r.table.columns = {"funding_tx", "contract", "funding_height", "creation_height", "value"};
    for (const auto& f : eth::find_precreation_funding(v.snapshot, v.registry)) {
        r.table.add({f.funding_tx, f.contract.to_hex(), f.funding_height, f.creation_height, amount_to_string(f.value)});
    }
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

void run_probe(Context& ctx, const EthArgs& a)
{
    const EthView v = load_view(ctx, load_side(a.side_files));
    const eth::SideRecords fixtures = load_side(a.fixture_files);
    eth::SelectorDictionary dict = eth::SelectorDictionary::default_dictionary();
    if (!a.dictionary.empty()) {
        std::ifstream in(a.dictionary);
        if (!in) throw IoError("cannot open " + a.dictionary);
        dict = eth::SelectorDictionary::load(in);
    }
    eth::GasPolicy policy;
    policy.vulnerability_threshold = a.threshold;
    eth::FixtureExecutor executor(fixtures.gas_fixtures, a.serial);
    std::vector<eth::ContractRecord> live;
    for (eth::ContractRecord& c : v.registry.records()) {
        if (!c.terminated()) live.push_back(std::move(c));
    }
    const eth::ProbeBatch batch =
        eth::probe_suicidal(live, executor, dict, policy, eth::ProbeOptions{eth::Address::from_hex(a.caller), a.threads});

    report::Report r;
    r.table.columns = {"contract",   "triggering_selector", "function",           "gas_estimate",
                       "confirmed",  "refund_destination",  "refund_address",     "suspicious_default_function",
                       "vulnerable_selectors"};
    for (const eth::ProbeResult& p : batch.results) {
        std::string vulnerable;
        for (const eth::Selector& s : p.vulnerable_selectors) vulnerable += (vulnerable.empty() ? "" : ";") + s.to_hex();
        r.table.add({p.contract.to_hex(), p.triggering_selector ? json(p.triggering_selector->to_hex()) : json(nullptr),
                     p.triggering_selector ? json(dict.label(*p.triggering_selector)) : json(nullptr), p.gas_estimate,
                     p.confirmed_terminated, std::string(eth::refund_destination_name(p.refund_destination)),
                     p.refund_address ? json(p.refund_address->to_hex()) : json(nullptr),
                     p.suspicious_default_function, vulnerable});
    }
    json failures = json::array();
    for (const eth::ProbeFailure& f : batch.failures) {
        *ctx.err << "probe failed for " << f.contract.to_hex() << ": " << f.message << '\n';
        failures.push_back({{"contract", f.contract.to_hex()}, {"message", f.message}});
    }
    r.document = {{"results", r.table.to_json()},
                  {"failures", failures},
                  {"contracts_probed", live.size()},
                  {"dictionary_size", dict.size()},
                  {"threshold", policy.vulnerability_threshold}};
    ctx.emit(r, report::Format::Csv);
}

void run_similarity(Context& ctx, const EthArgs& a)
{
    const EthView v = load_view(ctx, load_side(a.side_files));
    const json refs_doc = json::parse(read_file(a.references));
    if (!refs_doc.is_array()) throw Error("references must be a JSON array");
    std::vector<eth::SimilarityReference> refs;
    for (const json& r : refs_doc) {
        refs.push_back(eth::SimilarityReference{r.at("name").get<std::string>(), r.at("code").get<std::string>(),
                                                r.value("optimized", false)});
    }
    eth::SimilarityBuckets buckets;
    buckets.minor = a.minor;
    buckets.heavy = a.heavy;
    const std::vector<eth::ContractRecord> corpus = v.registry.records();
    report::Report r;
    r.table.columns = {"reference", "optimized", "size_bytes", "exact", "minor", "heavy"};
    for (const auto& row : eth::bucket_similarity(corpus, refs, buckets, a.threads)) {
        r.table.add({row.name, row.optimized, row.size, row.exact, row.minor, row.heavy});
    }
    r.document = r.table.to_json();
    ctx.emit(r, report::Format::Csv);
}

} // namespace

void register_eth_commands(CLI::App& app, Context& ctx, Action& action)
{
    auto args = std::make_shared<EthArgs>();
    auto* eth_cmd = app.add_subcommand("eth", "Ethereum contract analytics");
    eth_cmd->require_subcommand(1);
    eth_cmd->add_option("--side", args->side_files, "NDJSON side-file(s): internal_create / terminate records");

    auto add = [&](const char* name, const char* help, void (*fn)(Context&, const EthArgs&)) {
        auto* sub = eth_cmd->add_subcommand(name, help);
        sub->callback([&ctx, &action, args, fn] { action = [&ctx, args, fn] { fn(ctx, *args); }; });
        return sub;
    };
    add("classify", "Transaction classes per month", run_classify);
    add("zombies", "Contracts created without code", run_zombies)
        ->add_option("--top", args->top, "Largest endowments to list");
    add("lifetimes", "Histogram of blocks between creation and termination", run_lifetimes)
        ->add_option("--edges", args->edges, "Inclusive bucket upper bounds")
        ->delimiter(',');
    add("precreation", "Value sent to addresses before their contract existed", run_precreation);
    auto* probe = add("probe", "Dictionary probe for callable self-destruct functions", run_probe);
    probe->add_option("--fixtures", args->fixture_files, "NDJSON gas_fixture records")->required();
    probe->add_option("--dictionary", args->dictionary, "Selector dictionary file");
    probe->add_option("--caller", args->caller, "Address that sends the invocations");
    probe->add_option("--threshold", args->threshold, "Estimates below this count as vulnerable");
    probe->add_option("--threads", args->threads, "Parallel contracts (0: hardware threads)");
    probe->add_flag("--serial", args->serial, "Executor must not be called concurrently");
    auto* sim = add("similarity", "Levenshtein buckets against reference bytecodes", run_similarity);
    sim->add_option("--references", args->references, "JSON array of {name, code, optimized}")->required();
    sim->add_option("--minor", args->minor, "Upper bound of the minor-changes bucket");
    sim->add_option("--heavy", args->heavy, "Upper bound of the heavy-changes bucket and cutoff");
    sim->add_option("--threads", args->threads, "Parallel comparisons (0: hardware threads)");
}

} // namespace chainlens::cli
