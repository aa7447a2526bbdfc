#include "hookswap/json_io.hpp"

namespace hookswap {

namespace {

Context context_from_json(const nlohmann::json& j)
{
    try {
        return Context{j.at("a").get<int>(), j.at("l").get<int>(), j.at("m").get<int>()};
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("quintuple JSON needs integer fields a, l, m: ") + e.what());
    }
}

Partition field(const nlohmann::json& j, const char* name)
{
    if (!j.contains(name) || !j.at(name).is_string())
        throw ValidationError(std::string("quintuple JSON field \"") + name + "\" must be a partition string");
    return parse_partition(j.at(name).get<std::string>());
}

} // namespace

nlohmann::ordered_json to_json(const StatTuple& s)
{
    return {{"arm", s.arm},   {"leg", s.leg},   {"coarm", s.coarm},
            {"coleg", s.coleg}, {"hook", s.hook}, {"part", s.part_len}};
}

nlohmann::ordered_json to_json(const PointedPartition& pp)
{
    return {{"partition", to_string(pp.partition())}, {"cell", to_string(pp.cell())}};
}

nlohmann::ordered_json to_json(const Quintuple& q)
{
    return {{"A", to_string(q.A)}, {"B", to_string(q.B)}, {"C", to_string(q.C)}, {"D", to_string(q.D)},
            {"E", to_string(q.E)}, {"a", q.ctx.a},          {"l", q.ctx.l},          {"m", q.ctx.m}};
}

nlohmann::ordered_json to_json(const TildeQuintuple& tq)
{
    return {{"At", to_string(tq.At)}, {"B", to_string(tq.B)}, {"Ct", to_string(tq.Ct)}, {"D", to_string(tq.D)},
            {"E", to_string(tq.E)},   {"a", tq.ctx.a},         {"l", tq.ctx.l},          {"m", tq.ctx.m}};
}

nlohmann::ordered_json to_json(const QSeries& s)
{
    return {{"max_degree", s.max_degree()}, {"coeffs", s.coeffs()}, {"series", s.to_string()}};
}

Quintuple quintuple_from_json(const nlohmann::json& j)
{
    Quintuple q{field(j, "A"), field(j, "B"), field(j, "C"), field(j, "D"), field(j, "E"), context_from_json(j)};
    q.validate();
    return q;
}

TildeQuintuple tilde_quintuple_from_json(const nlohmann::json& j)
{
    TildeQuintuple tq{field(j, "At"), field(j, "B"), field(j, "Ct"), field(j, "D"), field(j, "E"), context_from_json(j)};
    tq.validate();
    return tq;
}

} // namespace hookswap
