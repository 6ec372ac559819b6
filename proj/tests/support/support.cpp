// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include "support.hpp"

#include <chainlens/cli/cli.hpp>
#include <chainlens/common/hex.hpp>
#include <chainlens/model/ingest.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace chainlens::test {

std::filesystem::path fixture_path(const std::string& name)
{
    return std::filesystem::path(CHAINLENS_FIXTURE_DIR) / name;
}

std::filesystem::path data_path(const std::string& name)
{
    return std::filesystem::path(CHAINLENS_DATA_DIR) / name;
}

std::string read_text(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json load_json(const std::string& fixture_name)
{
    return nlohmann::json::parse(read_text(fixture_path(fixture_name)));
}

model::Store ingest_text(const std::string& ndjson, model::ChainKind chain)
{
    model::Store store = model::Store::in_memory();
    std::istringstream in(ndjson);
    model::IngestOptions opts;
    opts.strict = true;
    model::ingest_blocks(in, chain, store, opts);
    return store;
}

model::Store ingest_fixture(const std::string& fixture_name, model::ChainKind chain)
{
    return ingest_text(read_text(fixture_path(fixture_name)), chain);
}

TempDir::TempDir()
{
    static std::mt19937_64 rng{std::random_device{}()};
    for (int attempt = 0; attempt < 100; ++attempt) {
        auto p = std::filesystem::temp_directory_path() / ("chainlens-test-" + std::to_string(rng()));
        if (std::filesystem::create_directory(p)) {
            path_ = p;
            return;
        }
    }
    throw std::runtime_error("cannot create a temporary directory");
}

TempDir::~TempDir()
{
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

CliResult run_cli(const std::vector<std::string>& args)
{
    std::vector<const char*> argv{"chainlens"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string random_hex(std::mt19937_64& rng, std::size_t n_bytes)
{
    Bytes b(n_bytes);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng());
    return to_hex(b);
}

crawler::NodeId random_node_id(std::mt19937_64& rng)
{
    crawler::NodeId id;
    for (auto& x : id.bytes) x = static_cast<std::uint8_t>(rng());
    return id;
}

std::string random_chain_ndjson(std::mt19937_64& rng, model::ChainKind chain, int n_blocks)
{
    using nlohmann::json;
    const std::string code(model::chain_code(chain));
    std::uniform_int_distribution<int> n_tx(0, 4);
    std::uniform_int_distribution<std::int64_t> gap(60, 6 * 86400);
    std::uniform_int_distribution<std::uint64_t> value(0, 1'000'000'000'000ULL);
    std::ostringstream out;
    std::int64_t t = 1'420'070'400 + static_cast<std::int64_t>(rng() % 86400);
    std::string parent = "0x" + std::string(64, '0');
    int tx_counter = 0;
    for (int h = 0; h < n_blocks; ++h) {
        t += gap(rng);
        const std::string hash = random_hex(rng, 32);
        std::vector<json> txs;
        const int n = n_tx(rng);
        for (int i = 0; i < n; ++i) {
            json tx = {{"type", "tx"},
                       {"chain", code},
                       {"hash", random_hex(rng, 32)},
                       {"height", h},
                       {"index", i},
                       {"from", random_hex(rng, 20)},
                       {"to", random_hex(rng, 20)},
                       {"value", std::to_string(value(rng))},
                       {"input", "0x"}};
            txs.push_back(tx);
            ++tx_counter;
        }
        json block = {{"type", "block"}, {"chain", code}, {"height", h}, {"hash", hash}, {"parent", parent},
                      {"time", t}, {"txs", json::array()}};
        for (const json& tx : txs) block["txs"].push_back(tx["hash"]);
        if (chain == model::ChainKind::Peercoin) block["proof"] = (rng() % 3 == 0) ? "pow" : "pos";
        if (chain == model::ChainKind::Namecoin) block["auxpow"] = h >= 19'200 && rng() % 2 == 0;
        // Now and then a block is missing and its transactions are orphans.
        if (h == 0 || rng() % 25 != 0) out << block.dump() << '\n';
        for (const json& tx : txs) out << tx.dump() << '\n';
        parent = hash;
    }
    // Orphans reference a height that is never ingested.
    if (rng() % 2 == 0) {
        json tx = {{"type", "tx"},   {"chain", code}, {"hash", random_hex(rng, 32)}, {"height", n_blocks + 5},
                   {"index", 0},     {"from", random_hex(rng, 20)}, {"to", random_hex(rng, 20)},
                   {"value", "7"},   {"input", "0x"}};
        out << tx.dump() << '\n';
    }
    return out.str();
}

namespace oracle {

std::size_t levenshtein(std::string_view a, std::string_view b)
{
    std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
    for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
    for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
        }
    }
    return d[a.size()][b.size()];
}

std::vector<crawler::PeerInfo> neighbors(std::vector<crawler::PeerInfo> candidates, const crawler::NodeHash& target,
                                         std::size_t k)
{
    std::stable_sort(candidates.begin(), candidates.end(), [&](const auto& x, const auto& y) {
        const auto dx = crawler::xor_distance(crawler::node_hash(x.node_id), target);
        const auto dy = crawler::xor_distance(crawler::node_hash(y.node_id), target);
        if (dx != dy) return dx < dy;
        return x < y;
    });
    if (candidates.size() > k) candidates.resize(k);
    return candidates;
}

} // namespace oracle

} // namespace chainlens::test
