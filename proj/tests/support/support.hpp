// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_TEST_SUPPORT_HPP
#define CHAINLENS_TEST_SUPPORT_HPP

#include <chainlens/crawler/node.hpp>
#include <chainlens/model/store.hpp>
#include <chainlens/model/types.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace chainlens::test {

std::filesystem::path fixture_path(const std::string& name);
std::filesystem::path data_path(const std::string& name);
std::string read_text(const std::filesystem::path& path);
nlohmann::json load_json(const std::string& fixture_name);

/// In-memory store holding one NDJSON fixture.
model::Store ingest_fixture(const std::string& fixture_name, model::ChainKind chain);
model::Store ingest_text(const std::string& ndjson, model::ChainKind chain);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir
{
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
};

struct CliResult {
    int code{0};
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

/// Random NDJSON ledger: contiguous heights from 0, increasing timestamps
/// spread over several months, 0-4 transactions per block, plus the
/// occasional orphan transaction whose block is absent.
std::string random_chain_ndjson(std::mt19937_64& rng, model::ChainKind chain, int n_blocks);

std::string random_hex(std::mt19937_64& rng, std::size_t n_bytes);
crawler::NodeId random_node_id(std::mt19937_64& rng);

namespace oracle {

/// Textbook O(|a||b|) edit distance.
std::size_t levenshtein(std::string_view a, std::string_view b);

/// Sorts every candidate by XOR distance to target, then node id, then
/// endpoint, and keeps the first k.
std::vector<crawler::PeerInfo> neighbors(std::vector<crawler::PeerInfo> candidates, const crawler::NodeHash& target,
                                         std::size_t k);

} // namespace oracle

} // namespace chainlens::test

#endif // CHAINLENS_TEST_SUPPORT_HPP
