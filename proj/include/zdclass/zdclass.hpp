#pragma once

#include "zdclass/error.hpp"
#include "zdclass/id_set.hpp"
#include "zdclass/ring.hpp"
#include "zdclass/poly.hpp"
#include "zdclass/quotient.hpp"
#include "zdclass/ring_spec.hpp"
#include "zdclass/graph.hpp"
#include "zdclass/graph_kit.hpp"
#include "zdclass/zd_core.hpp"
#include "zdclass/theorems.hpp"
#include "zdclass/census.hpp"
#include "zdclass/io.hpp"
