// Copyright (c) 2026 The chainlens developers
// Distributed under the MIT software license, see the accompanying
// file COPYING or http://www.opensource.org/licenses/mit-license.php.

#ifndef CHAINLENS_ETH_SELECTOR_HPP
#define CHAINLENS_ETH_SELECTOR_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chainlens::eth {

struct Selector {
    std::array<std::uint8_t, 4> bytes{};

    static Selector from_hex(std::string_view text);
    std::string to_hex() const;
    auto operator<=>(const Selector&) const = default;
};

/// First four bytes of keccak256 over the canonical signature text,
/// e.g. "kill()". Case-sensitive.
Selector function_selector(std::string_view signature);

struct SelectorEntry {
    Selector selector;
    /// Source-level signature when known; raw selectors harvested from
    /// historical termination transactions have none.
    std::optional<std::string> signature;

    bool operator==(const SelectorEntry&) const = default;
};

/// Ordered, duplicate-free list of termination-call candidates.
class SelectorDictionary
{
public:
    /// The shipped 14 entries: kill, suicide, end, destroy, done, delete,
    /// redeem, terminate, remove, then five raw selectors.
    static SelectorDictionary default_dictionary();

    /// One entry per line: either a signature such as `kill()`, or
    /// `0x<8 hex digits>` optionally followed by `,<signature>`. Blank lines
    /// and '#' comments are skipped. Throws MalformedRow.
    static SelectorDictionary load(std::istream& in);

    /// False when the selector is already present.
    bool add(SelectorEntry entry);
    const std::vector<SelectorEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    /// Signature if known, else the selector hex.
    std::string label(const Selector& selector) const;

private:
    std::vector<SelectorEntry> entries_;
};

} // namespace chainlens::eth

#endif // CHAINLENS_ETH_SELECTOR_HPP
