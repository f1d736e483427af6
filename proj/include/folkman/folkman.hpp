// Umbrella header.
#pragma once

#include "folkman/core.hpp"
#include "folkman/enumerate.hpp"
#include "folkman/explore.hpp"
#include "folkman/families.hpp"
#include "folkman/graph.hpp"
#include "folkman/invariants.hpp"
#include "folkman/io.hpp"
#include "folkman/proof.hpp"
#include "folkman/solvers.hpp"
#include "folkman/verify.hpp"
