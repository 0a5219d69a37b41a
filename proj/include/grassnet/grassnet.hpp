#pragma once

// Umbrella header: exact verification of the electrical-network vertex
// model and its Grassmannian embeddings.

#include "grassnet/calibration.hpp"
#include "grassnet/constants.hpp"
#include "grassnet/error.hpp"
#include "grassnet/generators.hpp"
#include "grassnet/grassmann.hpp"
#include "grassnet/json_io.hpp"
#include "grassnet/linalg.hpp"
#include "grassnet/matrix.hpp"
#include "grassnet/network.hpp"
#include "grassnet/rational.hpp"
#include "grassnet/reduction.hpp"
#include "grassnet/rng.hpp"
#include "grassnet/subsets.hpp"
#include "grassnet/verify.hpp"
#include "grassnet/vertex.hpp"
