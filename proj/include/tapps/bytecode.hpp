#pragma once

#include "tapps/ast.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tapps {

enum class Opcode {
    Cast,
    DelDataFrame,
    DelParam,
    Describe,
    DuplicateFrame,
    GreedySearch,
    IdSearch,
    LoadCsv1,
    LoadCsv2,
    LoadSession,
    MergeLabels1,
    MergeLabels2,
    MergeSeries,
    NewDataFrame,
    NewParam,
    PythonShell,
    RenameSeries,
    RenameLabels,
    RunPlugin,
    SaveCsv,
    SaveSession,
    Set,
    Show,
};

inline constexpr std::array kAllOpcodes = {
    Opcode::Cast,         Opcode::DelDataFrame, Opcode::DelParam,     Opcode::Describe,
    Opcode::DuplicateFrame, Opcode::GreedySearch, Opcode::IdSearch,   Opcode::LoadCsv1,
    Opcode::LoadCsv2,     Opcode::LoadSession,  Opcode::MergeLabels1, Opcode::MergeLabels2,
    Opcode::MergeSeries,  Opcode::NewDataFrame, Opcode::NewParam,     Opcode::PythonShell,
    Opcode::RenameSeries, Opcode::RenameLabels, Opcode::RunPlugin,    Opcode::SaveCsv,
    Opcode::SaveSession,  Opcode::Set,          Opcode::Show,
};

std::string_view opcode_name(Opcode op);
std::optional<Opcode> opcode_from_name(std::string_view name);

/// Operand layouts:
///   cast           <type> <series list> <frame>
///   deldataframe   <frame>                    delparam  <set>
///   describe       <frame>
///   duplicateframe <frame> <new frame>
///   greedysearch   <frame> <new frame> <op> <value>
///   idsearch       <frame> <new frame> <series> <op> <value>
///   loadcsv1/2     <file> <frame>             loadsession <file>
///   mergelabels1/2 <source> <destination>
///   mergeseries    <series list> <source> <destination>
///   newdataframe   <new frame> <set> dataframe|results
///   newparam       <plugin> <set>
///   pythonshell
///   renameseries/renamelabels <frame> <old> <new>
///   runplugin      <set>
///   savecsv        <frame> <file>             savesession <file>
///   set            <variable> <value...>  (see set_arity)
///   show           <item> [plugin]
/// Series lists are encoded with ast::format_id_list.
class Bytecode {
public:
    /// Throws Error(InvalidArgument) when the operand count does not fit the opcode.
    Bytecode(Opcode opcode, std::vector<std::string> operands = {});

    Opcode opcode() const noexcept { return opcode_; }
    const std::vector<std::string>& operands() const noexcept { return operands_; }
    const std::string& operand(std::size_t i) const { return operands_.at(i); }

    bool operator==(const Bytecode&) const = default;

private:
    Opcode opcode_;
    std::vector<std::string> operands_;
};

bool arity_ok(Opcode opcode, const std::vector<std::string>& operands);

/// One statement compiles to exactly one bytecode.
std::vector<Bytecode> compile(const ast::Statement& statement);

/// Decodes a value operand written by ast::format_value: a quoted operand is
/// text, anything else is read as a literal.
CellValue value_operand(const std::string& operand);

/// "opcode operand1 operand2 ..." with operands quoted when they contain
/// whitespace, quotes or are empty.
std::string render(const Bytecode& bytecode);

}  // namespace tapps
