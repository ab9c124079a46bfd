#ifndef CUBESEG_CUBESEG_HPP
#define CUBESEG_CUBESEG_HPP

#include "cubeseg/bijection.hpp"
#include "cubeseg/combinations.hpp"
#include "cubeseg/cube.hpp"
#include "cubeseg/errors.hpp"
#include "cubeseg/oracle.hpp"
#include "cubeseg/recursion.hpp"
#include "cubeseg/vertex_io.hpp"
#include "cubeseg/weights.hpp"

#endif  // CUBESEG_CUBESEG_HPP
