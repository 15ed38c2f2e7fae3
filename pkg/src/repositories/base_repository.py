#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Base Repository Class
"""

from typing import Generic, List, Optional, Type, TypeVar

from src.utils.file_util import FileUtil

T = TypeVar('T')


class BaseRepository(Generic[T]):
    """Base repository class, keeps entities as lines of a JSON-lines file

    Entities need to_dict, from_dict and a key property.
    """

    def __init__(self, data_file: str, entity_class: Type[T]):
        """Initialize repository

        Args:
            data_file (str): Data file path
            entity_class (Type[T]): Entity class
        """
        self.data_file = data_file
        self.entity_class = entity_class

        # Ensure data file exists
        FileUtil.ensure_file_exists(data_file)

    def get_all(self) -> List[T]:
        """Get all entities

        Returns:
            List[T]: List of entities
        """
        return [self.entity_class.from_dict(row) for row in FileUtil.read_jsonl(self.data_file)]

    def get_by_key(self, key) -> Optional[T]:
        """Get entity by key

        Args:
            key: Entity key

        Returns:
            Optional[T]: Entity, returns None if not found
        """
        for entity in self.get_all():
            if entity.key == key:
                return entity
        return None

    def add(self, entity: T) -> T:
        """Append entity

        Args:
            entity (T): Entity to add

        Returns:
            T: Added entity
        """
        FileUtil.append_jsonl(self.data_file, entity.to_dict())
        return entity

    def update(self, entity: T) -> T:
        """Replace the entity with the same key, or append it

        Args:
            entity (T): Entity to update

        Returns:
            T: Updated entity
        """
        FileUtil.update_jsonl(
            self.data_file,
            lambda row: self.entity_class.from_dict(row).key == entity.key,
            entity.to_dict()
        )
        return entity

    def delete(self, key) -> bool:
        """Delete entity

        Args:
            key: Entity key

        Returns:
            bool: Whether deletion was successful
        """
        return FileUtil.delete_jsonl(
            self.data_file,
            lambda row: self.entity_class.from_dict(row).key == key
        )
