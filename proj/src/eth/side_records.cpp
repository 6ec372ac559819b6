// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/side_records.hpp>

#include <chainlens/common/errors.hpp>
#include <chainlens/common/hex.hpp>

#include <nlohmann/json.hpp>

#include <istream>

namespace chainlens::eth {

using nlohmann::json;

namespace {

const json& field(const json& obj, const char* name)
{
    const auto it = obj.find(name);
    if (it == obj.end()) throw Error(std::string("missing field '") + name + "'");
    return *it;
}

std::int64_t height_of(const json& obj)
{
    const json& h = field(obj, "height");
    if (!h.is_number_unsigned()) throw Error("height must be a non-negative integer");
    return h.get<std::int64_t>();
}

std::optional<Address> optional_address(const json& v)
{
    if (v.is_null()) return std::nullopt;
    return Address::from_hex(v.get<std::string>());
}

} // namespace

void read_side_records(std::istream& in, SideRecords& out)
{
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            const json obj = json::parse(line);
            const std::string type = field(obj, "type").get<std::string>();
            if (type == "internal_create") {
                InternalCreation c;
                c.parent = Address::from_hex(field(obj, "parent").get<std::string>());
                c.address = Address::from_hex(field(obj, "address").get<std::string>());
                c.height = height_of(obj);
                if (const auto it = obj.find("code"); it != obj.end() && !it->is_null()) {
                    c.code = "0x" + normalize_hex(it->get<std::string>());
                }
                out.internal_creations.push_back(std::move(c));
            } else if (type == "terminate") {
                Termination t;
                t.address = Address::from_hex(field(obj, "address").get<std::string>());
                t.height = height_of(obj);
                if (const auto it = obj.find("refund_to"); it != obj.end()) t.refund_to = optional_address(*it);
                out.terminations.push_back(t);
            } else if (type == "gas_fixture") {
                GasFixture g;
                g.address = Address::from_hex(field(obj, "address").get<std::string>());
                g.selector = Selector::from_hex(field(obj, "selector").get<std::string>());
                const json& est = field(obj, "estimate");
                if (!est.is_number_unsigned()) throw Error("estimate must be a non-negative integer");
                g.estimate = est.get<std::uint64_t>();
                if (const auto it = obj.find("terminates"); it != obj.end()) g.terminates = it->get<bool>();
                if (const auto it = obj.find("refund_to"); it != obj.end() && !it->is_null()) {
                    const std::string to = it->get<std::string>();
                    if (to == "caller") {
                        g.refund.kind = FixtureRefund::Kind::Caller;
                    } else {
                        g.refund.kind = FixtureRefund::Kind::To;
                        g.refund.to = Address::from_hex(to);
                    }
                }
                if (const auto it = obj.find("error"); it != obj.end() && !it->is_null()) {
                    g.error = it->get<std::string>();
                }
                out.gas_fixtures.push_back(std::move(g));
            } else {
                throw Error("unknown side record type '" + type + "'");
            }
        } catch (const json::exception& e) {
            throw MalformedRow(std::string("side record: ") + e.what(), lineno);
        } catch (const MalformedRow&) {
            throw;
        } catch (const Error& e) {
            throw MalformedRow(std::string("side record: ") + e.what(), lineno);
        }
    }
}

} // namespace chainlens::eth
