#ifndef ALLIANCE_ALLIANCE_HPP
#define ALLIANCE_ALLIANCE_HPP

#include "alliance/closed_forms.hpp"
#include "alliance/engine.hpp"
#include "alliance/graph.hpp"
#include "alliance/graph_io.hpp"
#include "alliance/integer.hpp"
#include "alliance/polynomial.hpp"
#include "alliance/verify.hpp"

#endif  // ALLIANCE_ALLIANCE_HPP
