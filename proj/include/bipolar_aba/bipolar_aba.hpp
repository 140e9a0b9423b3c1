#pragma once

#include <bipolar_aba/benchgen.hpp>
#include <bipolar_aba/bitset.hpp>
#include <bipolar_aba/enumerate.hpp>
#include <bipolar_aba/error.hpp>
#include <bipolar_aba/framework.hpp>
#include <bipolar_aba/frontends.hpp>
#include <bipolar_aba/labelling.hpp>
#include <bipolar_aba/oracle.hpp>
#include <bipolar_aba/problems.hpp>
#include <bipolar_aba/verify.hpp>
