#pragma once

#include "c60/charpoly.hpp"
#include "c60/elimination.hpp"
#include "c60/fit.hpp"
#include "c60/graph.hpp"
#include "c60/green.hpp"
#include "c60/io.hpp"
#include "c60/matrix.hpp"
#include "c60/polynomial.hpp"
#include "c60/rational.hpp"
#include "c60/rational_function.hpp"
#include "c60/reference.hpp"
#include "c60/sobolev.hpp"
#include "c60/spectral.hpp"
#include "c60/symmetry.hpp"
