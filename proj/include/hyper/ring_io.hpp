#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/hyperring.hpp"
#include "hyper/zt_context.hpp"

namespace hyper {

/// Z_T with target ideal <n>; never materialized.
struct ZTSpec {
    std::vector<std::int64_t> T;
    int n = 0;

    [[nodiscard]] ZTContext context(int max_k = 8) const { return ZTContext(T, n, max_k); }
};

struct ZmtSpec {
    int m = 0;
    std::vector<int> T;
};

/// A parsed ring file: a finite table ring (possibly given as a Z_m,T
/// shorthand) or a Z_T context.
struct RingDescription {
    std::optional<Hyperring> ring;
    std::optional<ZmtSpec> zmt;
    std::optional<ZTSpec> zt;
    /// Display labels for carrier elements; empty means the numerals.
    std::vector<std::string> labels;

    [[nodiscard]] std::string label(Element e) const;
};

/// Parses the JSON ring format (see README). Throws Error(Parse) on schema
/// errors and AxiomError when the tables fail validation.
RingDescription parse_ring(std::string_view text);
RingDescription load_ring(const std::filesystem::path& path);

/// Canonical text: fixed key order, one table row per line, sets sorted.
/// parse_ring(emit_ring(d)) emits the same bytes.
std::string emit_ring(const RingDescription& desc);
std::string emit_ring(const Hyperring& ring, const std::vector<std::string>& labels = {});

/// An element list "0,3" (numerals or labels) or "gen:[3]" for the generated
/// hyperideal. Throws Error(Parse). The result is not checked to be an ideal.
ElementSet parse_ideal(const Hyperring& ring, std::string_view text,
                       const std::vector<std::string>& labels = {});

/// Integer list "2,4" or "[2,4]".
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace hyper
