"""
Export of analysis reports to spreadsheet and PDF form.
"""
from io import BytesIO
from typing import Any, Dict

from openpyxl.styles import Font, PatternFill
from reportlab.lib import colors
from reportlab.lib.pagesizes import letter
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from .report import report_tables

HEADER_COLOR = "3F51B5"


class ReportExporter:
    """Writes the tables of a report (lattice, betti, homotopy, certificate)."""

    @staticmethod
    def to_excel(report: Dict[str, Any]) -> BytesIO:
        """
        Export a report to an Excel workbook with one sheet per table.

        Args:
            report (Dict): output of build_report

        Returns:
            BytesIO: workbook data
        """
        import pandas as pd

        output = BytesIO()
        with pd.ExcelWriter(output, engine="openpyxl") as writer:
            for sheet, frame in report_tables(report).items():
                frame.to_excel(writer, sheet_name=sheet, index=False)
                worksheet = writer.sheets[sheet]
                for col in range(len(frame.columns)):
                    cell = worksheet.cell(row=1, column=col + 1)
                    cell.font = Font(bold=True)
                    cell.fill = PatternFill("solid", fgColor=HEADER_COLOR)
                for column in worksheet.columns:
                    width = max(len(str(cell.value)) if cell.value is not None else 0 for cell in column)
                    worksheet.column_dimensions[column[0].column_letter].width = width + 2
        output.seek(0)
        return output

    @staticmethod
    def to_pdf(report: Dict[str, Any]) -> BytesIO:
        """
        Export a report to PDF: verdict, then each table.

        Returns:
            BytesIO: PDF data
        """
        buffer = BytesIO()
        doc = SimpleDocTemplate(buffer, pagesize=letter)
        styles = getSampleStyleSheet()
        title_style = ParagraphStyle(
            "ReportTitle",
            parent=styles["Heading1"],
            fontSize=20,
            textColor=colors.HexColor(f"#{HEADER_COLOR}"),
            spaceAfter=20,
        )
        atoms = ", ".join(report["lattice"]["atoms"])
        elements = [
            Paragraph(f"Arrangement {atoms} in C^{report['lattice']['ambient_dim']}", title_style),
            Paragraph(report["classification"]["description"], styles["Normal"]),
            Spacer(1, 16),
        ]
        for name, frame in report_tables(report).items():
            if frame.empty:
                continue
            elements.append(Paragraph(name.capitalize(), styles["Heading2"]))
            data = [list(frame.columns)] + [[str(v) for v in row] for row in frame.itertuples(index=False)]
            table = Table(data)
            table.setStyle(TableStyle([
                ("BACKGROUND", (0, 0), (-1, 0), colors.HexColor(f"#{HEADER_COLOR}")),
                ("TEXTCOLOR", (0, 0), (-1, 0), colors.whitesmoke),
                ("FONTNAME", (0, 0), (-1, 0), "Helvetica-Bold"),
                ("FONTNAME", (0, 1), (-1, -1), "Helvetica"),
                ("FONTSIZE", (0, 0), (-1, -1), 10),
                ("GRID", (0, 0), (-1, -1), 1, colors.black),
                ("ALIGN", (0, 0), (-1, -1), "CENTER"),
                ("VALIGN", (0, 0), (-1, -1), "MIDDLE"),
            ]))
            elements.extend([table, Spacer(1, 12)])
        for warning in report["warnings"]:
            elements.append(Paragraph(f"Warning: {warning}", styles["Italic"]))
        doc.build(elements)
        buffer.seek(0)
        return buffer
