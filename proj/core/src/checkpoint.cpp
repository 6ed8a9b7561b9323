#include "cugan/checkpoint.hpp"

#include <fstream>

#include <json.hpp>

#include "cugan/base64.hpp"
#include "cugan/errors.hpp"

namespace cugan {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json net_to_json(const Mlp& net) {
    ordered_json layers = ordered_json::array();
    for (const Layer& l : net.layers) {
        ordered_json layer;
        layer["in"] = l.in_dim();
        layer["out"] = l.out_dim();
        layer["activation"] = activation_name(l.activation);
        layer["spectral_norm"] = l.spectral_norm;
        layer["weight"] = encode_f64le(l.weight.data);
        layer["bias"] = encode_f64le(l.bias);
        layers.push_back(std::move(layer));
    }
    ordered_json net_json;
    net_json["layers"] = std::move(layers);
    return net_json;
}

Mlp net_from_json(const ordered_json& j) {
    Mlp net;
    for (const auto& layer_json : j.at("layers")) {
        Layer l;
        const int in = layer_json.at("in").get<int>();
        const int out = layer_json.at("out").get<int>();
        l.activation = activation_from_name(layer_json.at("activation").get<std::string>());
        l.spectral_norm = layer_json.at("spectral_norm").get<bool>();
        l.weight = Matrix(in, out);
        l.weight.data = decode_f64le(layer_json.at("weight").get<std::string>());
        if (l.weight.data.size() != static_cast<std::size_t>(in) * out) {
            throw DataError("checkpoint: weight array size does not match dims");
        }
        l.bias = decode_f64le(layer_json.at("bias").get<std::string>());
        if (l.bias.size() != static_cast<std::size_t>(out)) {
            throw DataError("checkpoint: bias array size does not match dims");
        }
        net.layers.push_back(std::move(l));
    }
    if (net.layers.empty()) throw DataError("checkpoint: network has no layers");
    return net;
}

} // namespace

std::string checkpoint_to_json(const Mlp& generator, const Mlp& discriminator) {
    ordered_json j;
    j["format"] = "cugan-checkpoint-v1";
    j["generator"] = net_to_json(generator);
    j["discriminator"] = net_to_json(discriminator);
    return j.dump(2) + "\n";
}

void save_checkpoint(const Mlp& generator, const Mlp& discriminator,
                     const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write checkpoint: " + path);
    out << checkpoint_to_json(generator, discriminator);
    if (!out) throw IoError("write failed: " + path);
}

std::pair<Mlp, Mlp> load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open checkpoint: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("checkpoint parse error: ") + e.what());
    }
    try {
        return {net_from_json(j.at("generator")), net_from_json(j.at("discriminator"))};
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("checkpoint structure error: ") + e.what());
    }
}

} // namespace cugan
