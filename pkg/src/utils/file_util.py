#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
File utility class, provides read/write functionality for JSON-lines, JSON and CSV files
"""

import csv
import json
import logging
import os
from typing import Any, Callable, Dict, List

logger = logging.getLogger(__name__)


class FileUtil:
    """File utility class, provides read/write functionality for data and export files"""

    @staticmethod
    def ensure_parent_dir(file_path: str) -> None:
        """Create the directory of a file path if it is missing

        Args:
            file_path (str): File path
        """
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)

    @staticmethod
    def ensure_file_exists(file_path: str) -> None:
        """Ensure file exists, create an empty file if it doesn't exist

        Args:
            file_path (str): File path
        """
        if not os.path.exists(file_path):
            FileUtil.ensure_parent_dir(file_path)
            with open(file_path, 'w', encoding='utf-8'):
                pass

    @staticmethod
    def read_jsonl(file_path: str) -> List[Dict[str, Any]]:
        """Read a JSON-lines file

        Blank lines are skipped, unreadable lines are logged and skipped.

        Args:
            file_path (str): File path

        Returns:
            List[Dict[str, Any]]: One dictionary per line
        """
        FileUtil.ensure_file_exists(file_path)

        data = []
        with open(file_path, 'r', encoding='utf-8') as f:
            for number, line in enumerate(f, start=1):
                line = line.strip()
                if not line:
                    continue
                try:
                    data.append(json.loads(line))
                except json.JSONDecodeError as e:
                    logger.error("Skipping bad line %d of %s: %s", number, file_path, e)
        return data

    @staticmethod
    def write_jsonl(file_path: str, rows: List[Dict[str, Any]]) -> bool:
        """Rewrite a JSON-lines file

        The rows go to a temporary file first, which then replaces the target.

        Args:
            file_path (str): File path
            rows (List[Dict[str, Any]]): One dictionary per line

        Returns:
            bool: Whether write was successful
        """
        FileUtil.ensure_parent_dir(file_path)
        tmp_path = file_path + ".tmp"
        try:
            with open(tmp_path, 'w', encoding='utf-8') as f:
                for row in rows:
                    f.write(json.dumps(row, sort_keys=True) + "\n")
            os.replace(tmp_path, file_path)
            return True
        except (OSError, TypeError, ValueError) as e:
            logger.error("Error writing to file %s: %s", file_path, e)
            return False

    @staticmethod
    def append_jsonl(file_path: str, row: Dict[str, Any]) -> bool:
        """Append one JSON line

        Args:
            file_path (str): File path
            row (Dict[str, Any]): Row to append

        Returns:
            bool: Whether append was successful
        """
        FileUtil.ensure_file_exists(file_path)
        try:
            with open(file_path, 'a', encoding='utf-8') as f:
                f.write(json.dumps(row, sort_keys=True) + "\n")
            return True
        except (OSError, TypeError, ValueError) as e:
            logger.error("Error appending data to file %s: %s", file_path, e)
            return False

    @staticmethod
    def update_jsonl(file_path: str, condition: Callable[[Dict[str, Any]], bool],
                     row: Dict[str, Any]) -> bool:
        """Replace the first line matching condition, or append when none matches

        Args:
            file_path (str): File path
            condition (callable): Takes a dictionary and returns a boolean
            row (Dict[str, Any]): New row

        Returns:
            bool: Whether the file was written
        """
        existing = FileUtil.read_jsonl(file_path)
        for i, current in enumerate(existing):
            if condition(current):
                existing[i] = row
                return FileUtil.write_jsonl(file_path, existing)
        return FileUtil.append_jsonl(file_path, row)

    @staticmethod
    def delete_jsonl(file_path: str, condition: Callable[[Dict[str, Any]], bool]) -> bool:
        """Delete the lines matching condition

        Args:
            file_path (str): File path
            condition (callable): Takes a dictionary and returns a boolean

        Returns:
            bool: Whether any line was deleted
        """
        existing = FileUtil.read_jsonl(file_path)
        kept = [row for row in existing if not condition(row)]
        if len(kept) == len(existing):
            return False
        return FileUtil.write_jsonl(file_path, kept)

    @staticmethod
    def read_json(file_path: str) -> Any:
        """Read a JSON document

        Args:
            file_path (str): File path

        Returns:
            Any: Parsed document

        Raises:
            ValueError: If the file is not valid JSON
        """
        with open(file_path, 'r', encoding='utf-8') as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as e:
                raise ValueError(f"{file_path} is not valid JSON: {e}") from e

    @staticmethod
    def write_csv(file_path: str, header: List[str], rows: List[List[Any]]) -> bool:
        """Write a CSV table

        Args:
            file_path (str): File path
            header (List[str]): Column names
            rows (List[List[Any]]): Table rows

        Returns:
            bool: Whether write was successful
        """
        FileUtil.ensure_parent_dir(file_path)
        try:
            with open(file_path, 'w', newline='', encoding='utf-8') as f:
                writer = csv.writer(f)
                writer.writerow(header)
                writer.writerows(rows)
            return True
        except OSError as e:
            logger.error("Error writing to file %s: %s", file_path, e)
            return False

    @staticmethod
    def write_text(file_path: str, text: str) -> bool:
        """Write a text file

        Args:
            file_path (str): File path
            text (str): Content

        Returns:
            bool: Whether write was successful
        """
        FileUtil.ensure_parent_dir(file_path)
        try:
            with open(file_path, 'w', encoding='utf-8') as f:
                f.write(text)
            return True
        except OSError as e:
            logger.error("Error writing to file %s: %s", file_path, e)
            return False
