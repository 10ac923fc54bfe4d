//
// distex - distance spectral extremal graph toolkit
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "distex/canonical.hpp"
#include "distex/certify.hpp"
#include "distex/coloring.hpp"
#include "distex/distance.hpp"
#include "distex/embedding.hpp"
#include "distex/enumerate.hpp"
#include "distex/error.hpp"
#include "distex/families.hpp"
#include "distex/graph.hpp"
#include "distex/graph6.hpp"
#include "distex/lemmas.hpp"
#include "distex/parallel.hpp"
#include "distex/planarity.hpp"
#include "distex/rational.hpp"
#include "distex/spectral.hpp"
#include "distex/structure.hpp"
#include "distex/verify.hpp"
