#pragma once

// Core library. network_json.hpp, verify.hpp and cli.hpp pull in the vendored
// JSON and CLI11 headers and are included separately.
#include "errors.hpp"
#include "formal_sum.hpp"
#include "catalan.hpp"
#include "crossings.hpp"
#include "polyring.hpp"
#include "cactus_graph.hpp"
#include "network.hpp"
#include "grove.hpp"
#include "bush.hpp"
#include "immanant.hpp"
#include "straighten.hpp"
