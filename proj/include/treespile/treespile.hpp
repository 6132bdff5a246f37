#pragma once

#include "treespile/anneal.hpp"
#include "treespile/circuit.hpp"
#include "treespile/cost.hpp"
#include "treespile/enumerate.hpp"
#include "treespile/fermion.hpp"
#include "treespile/graph.hpp"
#include "treespile/io.hpp"
#include "treespile/mapping.hpp"
#include "treespile/pauli.hpp"
#include "treespile/rng.hpp"
