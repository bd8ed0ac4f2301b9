#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "summand/verdict.hpp"

namespace summand {

struct RingDescriptor;
using DescriptorPtr = std::shared_ptr<const RingDescriptor>;

struct ZmodSpec {
    int modulus = 0;
};

struct TableSpec {
    int size = 0;
    std::vector<int> add;  // size*size, row-major
    std::vector<int> mul;
    int zero = 0;
    int one = 0;
};

struct MatrixSpec {
    int dim = 0;
    DescriptorPtr base;
};

struct PatternSpec {
    int dim = 0;
    DescriptorPtr base;
    std::vector<std::uint8_t> mask;  // dim*dim, row-major, 0/1
};

struct ProductSpec {
    std::vector<DescriptorPtr> factors;
};

struct CornerSpec {
    DescriptorPtr base;
    int idem = 0;  // element index in the base ring, must be idempotent
};

struct OppositeSpec {
    DescriptorPtr base;
};

struct RingDescriptor {
    std::variant<ZmodSpec, TableSpec, MatrixSpec, PatternSpec, ProductSpec, CornerSpec,
                 OppositeSpec>
        spec;
};

DescriptorPtr make_zmod(int n);
DescriptorPtr make_table(TableSpec t);
DescriptorPtr make_matrix(int dim, DescriptorPtr base);
DescriptorPtr make_pattern(int dim, DescriptorPtr base, const std::vector<std::vector<int>>& mask);
DescriptorPtr make_product(std::vector<DescriptorPtr> factors);
DescriptorPtr make_corner(DescriptorPtr base, int idem);
DescriptorPtr make_opposite(DescriptorPtr base);

// Strict parser for the descriptor document format: unknown fields are
// errors, every semantic failure names the offending field path.
DescriptorPtr parse_descriptor(const std::string& text);
DescriptorPtr descriptor_from_json(const nlohmann::json& j, const std::string& path = "$");
nlohmann::json descriptor_to_json(const RingDescriptor& d);

// Compact human-readable name, e.g. "matrix(2, zmod(4))".
std::string describe(const RingDescriptor& d);

}  // namespace summand
