// SPDX-License-Identifier: Apache-2.0
// Copyright Contributors to the panfuse Project.

#include <panfuse/app/manifest.hpp>

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace panfuse::app {

namespace {

using nlohmann::json;

const json &require(const json &obj, const char *key, json::value_t type, const std::string &where)
{
    const auto it = obj.find(key);
    if (it == obj.end())
        throw ManifestError(where + ": missing \"" + key + "\"");
    const bool ok = type == json::value_t::number_float ? it->is_number() : it->type() == type;
    if (!ok)
        throw ManifestError(where + ": \"" + key + "\" has the wrong type");
    return *it;
}

std::string optional_string(const json &obj, const char *key, const std::string &where)
{
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return {};
    if (!it->is_string())
        throw ManifestError(where + ": \"" + key + "\" must be a string");
    return it->get<std::string>();
}

std::optional<double> optional_number(const json &obj, const char *key, const std::string &where)
{
    const auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        return std::nullopt;
    if (!it->is_number())
        throw ManifestError(where + ": \"" + key + "\" must be a number");
    return it->get<double>();
}

// pair ids become directory names and CSV fields.
void check_pair_id(const std::string &id, const std::string &where)
{
    if (id.empty() || id == "." || id == "..")
        throw ManifestError(where + ": invalid pair_id '" + id + "'");
    if (id.find_first_of(",/\\\"\n\r") != std::string::npos)
        throw ManifestError(where + ": pair_id '" + id +
                            "' must not contain commas, quotes, slashes or newlines");
}

std::filesystem::path resolve(const std::filesystem::path &base, const std::string &p)
{
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

} // namespace

BatchManifest parse_manifest(std::string_view json_text, const std::filesystem::path &base_dir)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error &e) {
        throw ManifestError(std::string("manifest is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ManifestError("manifest must be a JSON object");

    BatchManifest m;
    std::set<std::string> seen;
    const json &pairs = require(doc, "pairs", json::value_t::array, "manifest");
    if (pairs.empty())
        throw ManifestError("manifest: \"pairs\" is empty");
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const std::string where = "pairs[" + std::to_string(i) + "]";
        const json &p = pairs[i];
        if (!p.is_object())
            throw ManifestError(where + ": must be an object");

        BatchPair pair;
        pair.meta.pair_id = require(p, "pair_id", json::value_t::string, where).get<std::string>();
        check_pair_id(pair.meta.pair_id, where);
        if (!seen.insert(pair.meta.pair_id).second)
            throw ManifestError(where + ": duplicate pair_id '" + pair.meta.pair_id + "'");
        pair.ms_path =
            resolve(base_dir, require(p, "ms_path", json::value_t::string, where).get<std::string>());
        pair.pan_path =
            resolve(base_dir, require(p, "pan_path", json::value_t::string, where).get<std::string>());

        pair.meta.ms_sensor = optional_string(p, "ms_sensor", where);
        pair.meta.pan_sensor = optional_string(p, "pan_sensor", where);
        pair.meta.location = optional_string(p, "location", where);
        pair.meta.ms_resolution_m = optional_number(p, "ms_resolution_m", where);
        pair.meta.pan_resolution_m = optional_number(p, "pan_resolution_m", where);
        if (const auto it = p.find("spectral_ranges"); it != p.end() && !it->is_null()) {
            if (!it->is_array())
                throw ManifestError(where + ": \"spectral_ranges\" must be an array of strings");
            for (const auto &s : *it) {
                if (!s.is_string())
                    throw ManifestError(where + ": \"spectral_ranges\" must be an array of strings");
                pair.meta.spectral_ranges.push_back(s.get<std::string>());
            }
        }
        try {
            validate(pair.meta);
        } catch (const std::invalid_argument &e) {
            throw ManifestError(where + ": " + e.what());
        }
        m.pairs.push_back(std::move(pair));
    }

    const json &methods = require(doc, "methods", json::value_t::array, "manifest");
    if (methods.empty())
        throw ManifestError("manifest: \"methods\" is empty");
    for (const auto &name : methods) {
        if (!name.is_string())
            throw ManifestError("manifest: method names must be strings");
        const auto method = parse_fusion_method(name.get<std::string>());
        if (!method)
            throw ManifestError("manifest: unknown method '" + name.get<std::string>() +
                                "'; valid methods: " + fusion_method_list());
        if (std::find(m.methods.begin(), m.methods.end(), *method) != m.methods.end())
            throw ManifestError("manifest: method '" + std::string(to_string(*method)) +
                                "' listed twice");
        m.methods.push_back(*method);
    }

    m.output_dir =
        resolve(base_dir, require(doc, "output_dir", json::value_t::string, "manifest").get<std::string>());

    if (const auto pct = optional_number(doc, "csa_percentile", "manifest")) {
        if (!(*pct > 0.0 && *pct < 100.0))
            throw ManifestError("manifest: \"csa_percentile\" must lie in (0, 100)");
        m.csa_percentile = *pct;
    }
    return m;
}

BatchManifest load_manifest(const std::filesystem::path &path)
{
    std::ifstream file(path);
    if (!file)
        throw ManifestError("cannot open manifest '" + path.string() + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return parse_manifest(text.str(), path.parent_path());
}

} // namespace panfuse::app
