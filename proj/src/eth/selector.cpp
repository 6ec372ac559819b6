// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#include <chainlens/eth/selector.hpp>

#include <chainlens/common/csv.hpp>
#include <chainlens/common/hex.hpp>
#include <chainlens/crypto/keccak.hpp>

#include <algorithm>
#include <sstream>

namespace chainlens::eth {

namespace {

// Mirrors data/selectors.txt.
constexpr const char* kDefaultDictionary = R"(kill()
suicide()
end()
destroy()
done()
delete()
redeem()
terminate()
remove()
0x43d726d6
0xfc0e74d1
0x9cb8a26a
0x2b68b9c6
0x35f46994
)";

} // namespace

Selector Selector::from_hex(std::string_view text)
{
    return Selector{fixed_from_hex<4>(text)};
}

std::string Selector::to_hex() const
{
    return chainlens::to_hex(bytes, true);
}

Selector function_selector(std::string_view signature)
{
    const crypto::Hash256 digest = crypto::keccak256(signature);
    Selector s;
    std::copy(digest.begin(), digest.begin() + 4, s.bytes.begin());
    return s;
}

SelectorDictionary SelectorDictionary::default_dictionary()
{
    std::istringstream in(kDefaultDictionary);
    return load(in);
}

SelectorDictionary SelectorDictionary::load(std::istream& in)
{
    SelectorDictionary dict;
    for (const csv::TableRow& row : csv::read_table(in)) {
        const std::string& first = row.fields.at(0);
        SelectorEntry entry;
        if (first.rfind("0x", 0) == 0 || first.rfind("0X", 0) == 0) {
            if (row.fields.size() > 2) throw MalformedRow("selector line has too many fields", row.line);
            try {
                entry.selector = Selector::from_hex(first);
            } catch (const Error&) {
                throw MalformedRow("selector must be 4 bytes of hex", row.line);
            }
            if (row.fields.size() == 2 && !row.fields[1].empty()) {
                entry.signature = row.fields[1];
                if (function_selector(*entry.signature) != entry.selector) {
                    throw MalformedRow("signature does not hash to the given selector", row.line);
                }
            }
        } else {
            // Signatures with arguments contain commas; rejoin them.
            std::string signature = first;
            for (std::size_t i = 1; i < row.fields.size(); ++i) signature += "," + row.fields[i];
            if (signature.find('(') == std::string::npos || signature.back() != ')') {
                throw MalformedRow("expected a signature like kill() or a 0x selector", row.line);
            }
            entry.selector = function_selector(signature);
            entry.signature = std::move(signature);
        }
        dict.add(std::move(entry));
    }
    return dict;
}

bool SelectorDictionary::add(SelectorEntry entry)
{
    const bool present = std::any_of(entries_.begin(), entries_.end(),
                                     [&](const SelectorEntry& e) { return e.selector == entry.selector; });
    if (present) return false;
    entries_.push_back(std::move(entry));
    return true;
}

std::string SelectorDictionary::label(const Selector& selector) const
{
    for (const SelectorEntry& e : entries_) {
        if (e.selector == selector && e.signature) return *e.signature;
    }
    return selector.to_hex();
}

} // namespace chainlens::eth
