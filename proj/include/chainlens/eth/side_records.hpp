// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_SIDE_RECORDS_HPP
#define CHAINLENS_ETH_SIDE_RECORDS_HPP

#include <chainlens/eth/address.hpp>
#include <chainlens/eth/selector.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chainlens::eth {

// Facts the plain ledger cannot reveal without executing the EVM. They are
// supplied as NDJSON side-files, one record per line, keyed by "type".

/// {"type":"internal_create","parent":"0x..","address":"0x..","height":N,"code":"0x.."?}
struct InternalCreation {
    Address parent;
    Address address;
    std::int64_t height{0};
    std::string code{"0x"};
};

/// {"type":"terminate","address":"0x..","height":N,"refund_to":"0x..|null"}
struct Termination {
    Address address;
    std::int64_t height{0};
    std::optional<Address> refund_to;
};

/// Where a scripted invocation sends the balance.
struct FixtureRefund {
    enum class Kind { None, Caller, To } kind{Kind::None};
    Address to;
};

/// {"type":"gas_fixture","address":"0x..","selector":"0x41c0e1b5","estimate":N,
///  "terminates":bool,"refund_to":"0x..|null|caller","error":"..."?}
struct GasFixture {
    Address address;
    Selector selector;
    std::uint64_t estimate{0};
    bool terminates{false};
    FixtureRefund refund;
    /// When set the executor fails with this message instead of answering.
    std::optional<std::string> error;
};

struct SideRecords {
    std::vector<InternalCreation> internal_creations;
    std::vector<Termination> terminations;
    std::vector<GasFixture> gas_fixtures;
};

/// Appends every record of `in` to `out`. Throws MalformedRow naming the
/// line on bad JSON, unknown types or missing fields.
void read_side_records(std::istream& in, SideRecords& out);

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_SIDE_RECORDS_HPP
