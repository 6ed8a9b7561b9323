#pragma once

#include <string>
#include <utility>

#include "cugan/mlp.hpp"

namespace cugan {

/// JSON with layer dims, activation names, and base64-encoded little-endian
/// 64-bit float parameter arrays. Stable bytes for identical networks.
std::string checkpoint_to_json(const Mlp& generator, const Mlp& discriminator);

void save_checkpoint(const Mlp& generator, const Mlp& discriminator,
                     const std::string& path);

std::pair<Mlp, Mlp> load_checkpoint(const std::string& path);

} // namespace cugan
