#include "hookswap/partition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hookswap {

namespace {

void validate_parts(const std::vector<int>& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) {
            throw ValidationError("partition parts must be positive: part " + std::to_string(i + 1)
                                  + " is " + std::to_string(parts[i]));
        }
        if (i > 0 && parts[i - 1] < parts[i]) {
            throw ValidationError("partition parts must be weakly decreasing: part " + std::to_string(i)
                                  + " = " + std::to_string(parts[i - 1]) + " < part " + std::to_string(i + 1)
                                  + " = " + std::to_string(parts[i]));
        }
    }
}

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
    std::vector<int> out;
    const std::string body = trim(text);
    if (body.empty())
        return out;
    std::stringstream ss(body);
    std::string field;
    while (std::getline(ss, field, ',')) {
        const std::string tok = trim(field);
        int value = 0;
        const auto* end = tok.data() + tok.size();
        const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
        if (tok.empty() || ec != std::errc{} || ptr != end)
            throw ValidationError(std::string("malformed ") + what + " \"" + text + "\": bad integer \"" + tok + "\"");
        out.push_back(value);
    }
    if (body.back() == ',')
        throw ValidationError(std::string("malformed ") + what + " \"" + text + "\": trailing comma");
    return out;
}

} // namespace

Partition::Partition(std::vector<int> parts)
    : parts_(std::move(parts))
{
    validate_parts(parts_);
}

Partition Partition::from_padded(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    return Partition(std::move(parts));
}

Partition Partition::trusted(std::vector<int> parts) noexcept
{
    return Partition(Unchecked{}, std::move(parts));
}

std::int64_t Partition::weight() const noexcept
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

bool contains(const Partition& p, Cell v) noexcept
{
    return v.y >= 1 && static_cast<std::size_t>(v.y) <= p.length() && v.x >= 1 && v.x <= p.part(v.y);
}

void require_cell(const Partition& p, Cell v)
{
    if (!contains(p, v)) {
        throw ValidationError("cell (" + to_string(v) + ") is not in the diagram of partition (" + to_string(p)
                              + ")");
    }
}

PointedPartition::PointedPartition(Partition partition, Cell cell)
    : partition_(std::move(partition))
    , cell_(cell)
{
    require_cell(partition_, cell_);
}

Partition make_partition(std::span<const int> parts)
{
    return Partition(std::vector<int>(parts.begin(), parts.end()));
}

Partition conjugate(const Partition& p)
{
    // column i has as many cells as there are parts >= i
    std::vector<int> out(static_cast<std::size_t>(p.largest()), 0);
    for (int part : p.parts())
        for (int i = 0; i < part; ++i)
            ++out[static_cast<std::size_t>(i)];
    return Partition::trusted(std::move(out));
}

std::int64_t weight(const Partition& p) noexcept { return p.weight(); }

int leg_length(const Partition& p, Cell v) noexcept
{
    int leg = 0;
    for (std::size_t j = static_cast<std::size_t>(v.y) + 1; j <= p.length() && p.part(j) >= v.x; ++j)
        ++leg;
    return leg;
}

StatTuple stats(const Partition& p, Cell v)
{
    require_cell(p, v);
    StatTuple s;
    s.arm = p.part(static_cast<std::size_t>(v.y)) - v.x;
    s.leg = leg_length(p, v);
    s.coarm = v.x - 1;
    s.coleg = v.y - 1;
    s.hook = s.leg + s.arm + 1;
    s.part_len = s.coarm + s.arm + 1;
    return s;
}

std::string to_string(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string to_string(Cell v) { return std::to_string(v.x) + "," + std::to_string(v.y); }

Partition parse_partition(const std::string& text)
{
    return Partition(parse_int_list(text, "partition"));
}

Cell parse_cell(const std::string& text)
{
    const auto xs = parse_int_list(text, "cell");
    if (xs.size() != 2)
        throw ValidationError("malformed cell \"" + text + "\": expected \"x,y\"");
    if (xs[0] < 1 || xs[1] < 1)
        throw ValidationError("malformed cell \"" + text + "\": coordinates are 1-based");
    return Cell{xs[0], xs[1]};
}

} // namespace hookswap
