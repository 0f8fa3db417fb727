#pragma once

#include "crdfa/automaton.hpp"
#include "crdfa/error.hpp"
#include "crdfa/extension.hpp"
#include "crdfa/generators.hpp"
#include "crdfa/io.hpp"
#include "crdfa/oracle.hpp"
#include "crdfa/state_set.hpp"
#include "crdfa/witness.hpp"
#include "crdfa/word.hpp"
